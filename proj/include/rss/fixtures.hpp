#pragma once

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rss/graph.hpp"
#include "rss/turtle.hpp"

namespace rss::fixtures {

inline const std::set<std::string>& names() {
  static const std::set<std::string> all = {"wop",        "wop-described",   "arctic-tern",
                                            "cross-series-bad", "zero-members", "sequence-bad"};
  return all;
}

class UnknownFixture : public std::runtime_error {
 public:
  explicit UnknownFixture(const std::string& name)
      : std::runtime_error("unknown fixture: " + name) {}
};

inline std::string directory() {
  if (const char* env = std::getenv("RSS_FIXTURES_DIR")) return env;
#ifdef RSS_FIXTURES_DIR_DEFAULT
  return RSS_FIXTURES_DIR_DEFAULT;
#else
  return "fixtures";
#endif
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load(const std::string& name, const std::string& dir = directory()) {
  if (!names().count(name)) throw UnknownFixture(name);
  return parseTurtle(readFile(dir + "/" + name + ".ttl"));
}

}  // namespace rss::fixtures
