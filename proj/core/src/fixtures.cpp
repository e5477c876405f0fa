#include "tetra45/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "tetra45/series_io.hpp"

#ifndef TETRA45_DATA_DIR
#define TETRA45_DATA_DIR "."
#endif

namespace tetra45 {

std::string data_path(const std::string& name) {
  return std::string(TETRA45_DATA_DIR) + "/" + name;
}

Series parse_series_fixture(const std::string& text, const VarContext* ctx,
                            const std::string& what) {
  Series out(ctx);
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // strip whitespace
    std::string s;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) continue;

    auto fail = [&](const std::string& msg) {
      throw ParseError(what + ": " + msg + ": " + line, line_no);
    };

    // coefficient up to the first '*' (or whole line for constants)
    size_t star = s.find('*');
    std::string coeff_str = s.substr(0, star);
    auto coeff = rat_from_string(coeff_str);
    if (!coeff) fail("bad coefficient");
    Mono m;
    while (star != std::string::npos) {
      size_t beg = star + 1;
      star = s.find('*', beg);
      std::string factor = s.substr(beg, star == std::string::npos
                                              ? std::string::npos
                                              : star - beg);
      int exp = 1;
      auto caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
      int v = ctx->var_index(name);
      if (v < 0) fail("unknown variable " + name);
      if (exp < 0 || m.e[v] + exp > 255) fail("bad exponent");
      m.e[v] = static_cast<uint8_t>(m.e[v] + exp);
    }
    out.add_term(m, *coeff);
  }
  return out;
}

Series load_series_fixture(const std::string& path, const VarContext* ctx) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open fixture: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_series_fixture(ss.str(), ctx, path);
}

}  // namespace tetra45
