#include "tetra45/context.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "tetra45/curve.hpp"

namespace tetra45 {

int VarContext::var_index(const std::string& n) const {
  for (int i = 0; i < nvars; ++i)
    if (name[i] == n) return i;
  return -1;
}

namespace {

VarContext make_u45() {
  VarContext c;
  c.id = "u45";
  c.nvars = 11;
  c.graded = 6;
  const int wu[6] = {11, 7, 6, 3, 2, 1};
  for (int i = 0; i < 6; ++i) {
    c.weight[i] = wu[i];
    c.name[i] = "u" + std::to_string(i + 1);
  }
  for (int j = 0; j < 5; ++j) {
    c.weight[6 + j] = -4 * (5 - j);  // l0:-20 .. l4:-4
    c.name[6 + j] = "l" + std::to_string(j);
  }
  return c;
}

VarContext make_uv45() {
  VarContext c;
  c.id = "uv45";
  c.nvars = 17;
  c.graded = 12;
  const int wu[6] = {11, 7, 6, 3, 2, 1};
  for (int i = 0; i < 6; ++i) {
    c.weight[i] = wu[i];
    c.name[i] = "u" + std::to_string(i + 1);
    c.weight[6 + i] = wu[i];
    c.name[6 + i] = "v" + std::to_string(i + 1);
  }
  for (int j = 0; j < 5; ++j) {
    c.weight[12 + j] = -4 * (5 - j);
    c.name[12 + j] = "l" + std::to_string(j);
  }
  return c;
}

VarContext make_powersum45(int m) {
  VarContext c;
  c.id = "pw45_" + std::to_string(m);
  c.nvars = m + 5;
  c.graded = m;
  for (int i = 0; i < m; ++i) {
    c.weight[i] = i + 1;
    c.name[i] = "p" + std::to_string(i + 1);
  }
  for (int j = 0; j < 5; ++j) {
    c.weight[m + j] = -4 * (5 - j);
    c.name[m + j] = "l" + std::to_string(j);
  }
  return c;
}

VarContext make_xyzw45() {
  VarContext c;
  c.id = "xyzw45";
  c.nvars = 9;
  c.graded = 0;
  c.truncatable = false;
  const char* nm[4] = {"x", "y", "z", "w"};
  const int wt[4] = {-4, -5, -4, -5};
  for (int i = 0; i < 4; ++i) {
    c.weight[i] = wt[i];
    c.name[i] = nm[i];
  }
  for (int j = 0; j < 5; ++j) {
    c.weight[4 + j] = -4 * (5 - j);
    c.name[4 + j] = "l" + std::to_string(j);
  }
  return c;
}

}  // namespace

const VarContext* ctx_u45() {
  static const VarContext c = make_u45();
  return &c;
}

const VarContext* ctx_uv45() {
  static const VarContext c = make_uv45();
  return &c;
}

const VarContext* ctx_powersum45(int m) {
  if (m < 1 || m > 5) throw std::invalid_argument("power-sum context: m in 1..5");
  static const VarContext cs[5] = {make_powersum45(1), make_powersum45(2),
                                   make_powersum45(3), make_powersum45(4),
                                   make_powersum45(5)};
  return &cs[m - 1];
}

const VarContext* ctx_xyzw45() {
  static const VarContext c = make_xyzw45();
  return &c;
}

const VarContext* ctx_tspace(int k) {
  if (k < 1 || k > kMaxVars) throw std::invalid_argument("tspace: bad k");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<VarContext>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second.get();
  auto c = std::make_unique<VarContext>();
  c->id = "t" + std::to_string(k);
  c->nvars = k;
  c->graded = k;
  for (int i = 0; i < k; ++i) {
    c->weight[i] = i + 1;
    c->name[i] = "t" + std::to_string(i + 1);
  }
  const VarContext* out = c.get();
  cache.emplace(k, std::move(c));
  return out;
}

const VarContext* ctx_cyclic(int n, int s) {
  if (n == 4 && s == 5) return ctx_u45();
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<VarContext>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(n, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.get();

  auto gaps = gap_sequence(n, s);
  int g = static_cast<int>(gaps.size());
  if (g + s > kMaxVars) throw std::invalid_argument("curve too large for contexts");
  auto c = std::make_unique<VarContext>();
  c->id = "u" + std::to_string(n) + std::to_string(s);
  c->nvars = g + s;
  c->graded = g;
  for (int i = 0; i < g; ++i) {
    c->weight[i] = gaps[g - 1 - i];  // u1 carries the largest gap number
    c->name[i] = "u" + std::to_string(i + 1);
  }
  for (int j = 0; j < s; ++j) {
    c->weight[g + j] = -n * (s - j);
    c->name[g + j] = "l" + std::to_string(j);
  }
  const VarContext* out = c.get();
  cache.emplace(key, std::move(c));
  return out;
}

}  // namespace tetra45
