#include "process.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

namespace hadamard::testing {

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string read_file(const std::filesystem::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool same_outputs(const std::filesystem::path& a, const std::filesystem::path& b, std::string* why) {
  auto names = [](const std::filesystem::path& d) {
    std::set<std::string> s;
    for (const auto& e : std::filesystem::directory_iterator(d)) s.insert(e.path().filename().string());
    return s;
  };
  const auto na = names(a), nb = names(b);
  if (na != nb) {
    if (why) *why = "different file sets";
    return false;
  }
  for (const auto& n : na) {
    if (read_file(a / n) != read_file(b / n)) {
      if (why) *why = n + " differs";
      return false;
    }
  }
  return true;
}

} // namespace hadamard::testing
