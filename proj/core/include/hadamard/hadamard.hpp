#pragma once

#include "hadamard/errors.hpp"
#include "hadamard/jumpset.hpp"
#include "hadamard/material.hpp"
#include "hadamard/nucleus.hpp"
#include "hadamard/numerics.hpp"
#include "hadamard/pcx.hpp"
#include "hadamard/secondary.hpp"
#include "hadamard/verdict.hpp"
