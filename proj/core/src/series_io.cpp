#include "tetra45/series_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tetra45 {

namespace {

const VarContext* ctx_by_id(const std::string& id) {
  if (id == "u45") return ctx_u45();
  if (id == "uv45") return ctx_uv45();
  if (id == "xyzw45") return ctx_xyzw45();
  if (id.rfind("pw45_", 0) == 0) return ctx_powersum45(id.back() - '0');
  if (id.size() == 3 && id[0] == 'u' && isdigit(id[1]) && isdigit(id[2]))
    return ctx_cyclic(id[1] - '0', id[2] - '0');
  throw ParseError("unknown context id: " + id);
}

}  // namespace

std::string serialize(const Series& p) {
  std::ostringstream os;
  os << "tetra45/series v1 ctx=" << p.ctx()->id << " validity=";
  if (p.validity() >= kValidityExact)
    os << "exact";
  else
    os << p.validity();
  auto terms = p.sorted_terms();
  os << " terms=" << terms.size() << "\n";
  for (const auto& [m, c] : terms) {
    os << rat_to_string(c) << '\t';
    for (int i = 0; i < p.ctx()->nvars; ++i) {
      if (i) os << ' ';
      os << static_cast<int>(m.e[i]);
    }
    os << '\n';
  }
  return os.str();
}

Series parse_series(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty input", 1);
  std::istringstream hs(header);
  std::string magic, ver, ctxkv, validkv, termskv;
  hs >> magic >> ver >> ctxkv >> validkv >> termskv;
  if (magic != "tetra45/series" || ver != "v1")
    throw ParseError("bad format tag: " + header, 1);
  auto val = [&](const std::string& kv, const char* key) {
    std::string pre = std::string(key) + "=";
    if (kv.rfind(pre, 0) != 0) throw ParseError("expected " + pre + "...: " + kv, 1);
    return kv.substr(pre.size());
  };
  const VarContext* ctx = ctx_by_id(val(ctxkv, "ctx"));
  std::string vs = val(validkv, "validity");
  int validity = vs == "exact" ? kValidityExact : std::stoi(vs);
  size_t nterms = std::stoul(val(termskv, "terms"));

  Series p(ctx, validity);
  std::string line;
  int line_no = 1;
  size_t seen = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("missing tab separator", line_no);
    auto coeff = rat_from_string(line.substr(0, tab));
    if (!coeff) throw ParseError("bad coefficient: " + line.substr(0, tab), line_no);
    std::istringstream es(line.substr(tab + 1));
    Mono m;
    for (int i = 0; i < ctx->nvars; ++i) {
      int e;
      if (!(es >> e) || e < 0 || e > 255)
        throw ParseError("bad exponent vector", line_no);
      m.e[i] = static_cast<uint8_t>(e);
    }
    int extra;
    if (es >> extra) throw ParseError("trailing exponent", line_no);
    p.add_term(m, *coeff);
    ++seen;
  }
  if (seen != nterms) throw ParseError("term count mismatch");
  return p;
}

void write_binary(std::ostream& os, const Series& p) {
  auto put_u32 = [&](uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); };
  os.write("T45S", 4);
  put_u32(1);  // version
  put_u32(static_cast<uint32_t>(p.ctx()->id.size()));
  os.write(p.ctx()->id.data(), static_cast<std::streamsize>(p.ctx()->id.size()));
  put_u32(p.validity() >= kValidityExact ? 0xffffffffu
                                         : static_cast<uint32_t>(p.validity()));
  auto terms = p.sorted_terms();
  put_u32(static_cast<uint32_t>(terms.size()));
  for (const auto& [m, c] : terms) {
    os.write(reinterpret_cast<const char*>(m.e.data()), p.ctx()->nvars);
    std::string cs = rat_to_string(c);
    put_u32(static_cast<uint32_t>(cs.size()));
    os.write(cs.data(), static_cast<std::streamsize>(cs.size()));
  }
}

Series read_binary(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "T45S") throw ParseError("bad binary magic");
  auto get_u32 = [&]() {
    uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    if (!is) throw ParseError("truncated binary series");
    return v;
  };
  if (get_u32() != 1) throw ParseError("unsupported binary version");
  uint32_t idlen = get_u32();
  std::string id(idlen, '\0');
  is.read(id.data(), idlen);
  const VarContext* ctx = ctx_by_id(id);
  uint32_t vraw = get_u32();
  int validity = vraw == 0xffffffffu ? kValidityExact : static_cast<int>(vraw);
  uint32_t n = get_u32();
  Series p(ctx, validity);
  for (uint32_t k = 0; k < n; ++k) {
    Mono m;
    is.read(reinterpret_cast<char*>(m.e.data()), ctx->nvars);
    uint32_t clen = get_u32();
    std::string cs(clen, '\0');
    is.read(cs.data(), clen);
    if (!is) throw ParseError("truncated binary series");
    auto c = rat_from_string(cs);
    if (!c) throw ParseError("bad binary coefficient");
    p.add_term(m, *c);
  }
  return p;
}

std::string pretty_mono(const VarContext* ctx, const Mono& m) {
  std::string s;
  for (int i = 0; i < ctx->nvars; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += ctx->name[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string pretty(const Series& p, size_t max_terms) {
  if (p.empty()) return "0";
  std::string s;
  size_t shown = 0;
  for (const auto& [m, c] : p.sorted_terms()) {
    if (max_terms && shown >= max_terms) {
      s += " + ...";
      break;
    }
    std::string cs = rat_to_string(c);
    if (!s.empty()) s += cs[0] == '-' ? " - " : " + ";
    else if (cs[0] == '-') s += "-";
    if (cs[0] == '-') cs = cs.substr(1);
    std::string ms = pretty_mono(p.ctx(), m);
    if (cs == "1" && ms != "1") s += ms;
    else if (ms == "1") s += cs;
    else s += cs + "*" + ms;
    ++shown;
  }
  return s;
}

}  // namespace tetra45
