#include "trigor/oracle/enumerate.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace trigor::oracle {

using linalg::Field;
using linalg::Matrix;

namespace {

using Mat = std::vector<std::uint32_t>;  // row-major d x d

struct Layout {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> start;  // first entry of arrow a
  std::size_t entries = 0;
};

Layout layout_of(const algebra::Algebra& a, const std::vector<std::size_t>& dims) {
  Layout l{dims, {}, 0};
  for (const auto& ar : a.arrows()) {
    l.start.push_back(l.entries);
    l.entries += dims[ar.target] * dims[ar.source];
  }
  return l;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

std::vector<std::vector<std::size_t>> dimension_vectors(const EnumerationCap& cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> d(cap.dims.size(), 0);
  while (true) {
    std::size_t t = 0;
    for (auto x : d) t += x;
    if (!cap.total || t <= *cap.total) out.push_back(d);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (d[i] < cap.dims[i]) {
        ++d[i];
        for (std::size_t j = i + 1; j < d.size(); ++j) d[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = linalg::mod_mul(x, g, p);
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return 1;
}

// Generators of GL_d(F_p) with their inverses.
std::vector<std::pair<Mat, Mat>> gl_generators(std::size_t d, std::uint32_t p) {
  std::vector<std::pair<Mat, Mat>> gens;
  if (d == 0) return gens;
  auto id = [&] {
    Mat m(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
  };
  if (p > 2) {
    std::uint32_t c = primitive_root(p);
    Mat g = id(), gi = id();
    g[0] = c;
    gi[0] = linalg::mod_inv(c, p);
    gens.emplace_back(g, gi);
  }
  if (d >= 2) {
    Mat t = id(), ti = id();
    t[1] = 1;
    ti[1] = p - 1;
    gens.emplace_back(t, ti);
    Mat s(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) s[i * d + (i == 0 ? 1 : i == 1 ? 0 : i)] = 1;
    gens.emplace_back(s, s);
    if (d >= 3) {
      Mat c(d * d, 0), ci(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        c[((i + 1) % d) * d + i] = 1;
        ci[i * d + (i + 1) % d] = 1;
      }
      gens.emplace_back(c, ci);
    }
  }
  return gens;
}

class Orbits {
 public:
  Orbits(const algebra::Algebra& a, const Layout& l, std::uint32_t p) : a_(a), l_(l), p_(p) {
    for (std::size_t v = 0; v < l.dims.size(); ++v) gens_.push_back(gl_generators(l.dims[v], p));
  }

  void decode(std::uint64_t idx, std::vector<std::uint32_t>& x) const {
    x.resize(l_.entries);
    for (auto& e : x) {
      e = static_cast<std::uint32_t>(idx % p_);
      idx /= p_;
    }
  }
  std::uint64_t encode(const std::vector<std::uint32_t>& x) const {
    std::uint64_t idx = 0;
    for (std::size_t k = x.size(); k-- > 0;) idx = idx * p_ + x[k];
    return idx;
  }

  // Marks the orbit of idx as visited.
  void sweep(std::uint64_t idx, std::vector<bool>& visited) const {
    std::deque<std::uint64_t> queue{idx};
    visited[idx] = true;
    std::vector<std::uint32_t> x, y;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      decode(cur, x);
      for (std::size_t v = 0; v < gens_.size(); ++v)
        for (const auto& [g, gi] : gens_[v]) {
          act(x, static_cast<int>(v), g, gi, y);
          std::uint64_t n = encode(y);
          if (!visited[n]) {
            visited[n] = true;
            queue.push_back(n);
          }
        }
    }
  }

  Module module(std::uint64_t idx, const AlgebraPtr& alg, bool* ok) const {
    std::vector<std::uint32_t> x;
    decode(idx, x);
    const Field f = a_.field();
    std::vector<Matrix> maps;
    for (int k = 0; k < a_.num_arrows(); ++k) {
      const auto& ar = a_.arrows()[k];
      const std::size_t r = l_.dims[ar.target], c = l_.dims[ar.source];
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (auto e = x[l_.start[k] + i * c + j]) m.set(i, j, static_cast<long long>(e));
      maps.push_back(std::move(m));
    }
    auto m = Module::try_make(alg, l_.dims, maps);
    *ok = m.has_value();
    return m ? *m : Module();
  }

 private:
  void act(const std::vector<std::uint32_t>& x, int v, const Mat& g, const Mat& gi, std::vector<std::uint32_t>& y) const {
    y = x;
    const std::size_t d = l_.dims[v];
    std::vector<std::uint32_t> tmp;
    for (int k = 0; k < a_.num_arrows(); ++k) {
      const auto& ar = a_.arrows()[k];
      const std::size_t r = l_.dims[ar.target], c = l_.dims[ar.source], s = l_.start[k];
      if (ar.target == v) {
        tmp.assign(r * c, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t l = 0; l < d; ++l)
            if (auto gv = g[i * d + l])
              for (std::size_t j = 0; j < c; ++j) tmp[i * c + j] = static_cast<std::uint32_t>((tmp[i * c + j] + std::uint64_t{gv} * y[s + l * c + j]) % p_);
        std::copy(tmp.begin(), tmp.end(), y.begin() + static_cast<long>(s));
      }
      if (ar.source == v) {
        tmp.assign(r * c, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t l = 0; l < d; ++l)
            if (auto mv = y[s + i * c + l])
              for (std::size_t j = 0; j < d; ++j) tmp[i * c + j] = static_cast<std::uint32_t>((tmp[i * c + j] + std::uint64_t{mv} * gi[l * d + j]) % p_);
        std::copy(tmp.begin(), tmp.end(), y.begin() + static_cast<long>(s));
      }
    }
  }

  const algebra::Algebra& a_;
  const Layout& l_;
  std::uint32_t p_;
  std::vector<std::vector<std::pair<Mat, Mat>>> gens_;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, std::vector<Module>>& cache() {
  static std::map<std::string, std::vector<Module>> c;
  return c;
}

}  // namespace

EnumerationCap EnumerationCap::uniform(const AlgebraPtr& a, std::size_t d) {
  return {std::vector<std::size_t>(a->num_vertices(), d), std::nullopt};
}

EnumerationCap EnumerationCap::parse(const std::string& text, const AlgebraPtr& a) {
  std::vector<std::size_t> vals;
  std::string tok;
  for (char ch : text) {
    if (ch == ',' || ch == '|' || ch == ' ') {
      if (!tok.empty()) vals.push_back(std::stoul(tok));
      tok.clear();
    } else if (ch >= '0' && ch <= '9') {
      tok += ch;
    } else {
      throw std::invalid_argument("cap: unexpected character '" + std::string(1, ch) + "' in \"" + text + "\"");
    }
  }
  if (!tok.empty()) vals.push_back(std::stoul(tok));
  const auto nv = static_cast<std::size_t>(a->num_vertices());
  if (vals.size() == 1) return {std::vector<std::size_t>(nv, vals[0]), std::nullopt};
  if (vals.size() != nv)
    throw std::invalid_argument("cap \"" + text + "\" has " + std::to_string(vals.size()) + " entries, algebra has " +
                                std::to_string(nv) + " vertices");
  return {vals, std::nullopt};
}

std::string EnumerationCap::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  s += ")";
  if (total) s += " total<=" + std::to_string(*total);
  return s;
}

WorkLimitExceeded::WorkLimitExceeded(std::uint64_t e, std::uint64_t l)
    : std::runtime_error("enumeration would visit about " + std::to_string(e) + " matrix tuples, over the work limit " +
                         std::to_string(l)),
      estimate(e),
      limit(l) {}

std::uint64_t enumeration_work(const AlgebraPtr& a, const EnumerationCap& cap) {
  const std::uint64_t big = std::uint64_t{1} << 62;
  std::uint64_t total = 0;
  for (const auto& d : dimension_vectors(cap)) {
    total += ipow(a->field().p, layout_of(*a, d).entries, big);
    if (total > big) return big;
  }
  return total;
}

std::vector<Module> enumerate_modules(const AlgebraPtr& a, const EnumerationCap& cap, std::uint64_t work_limit) {
  if (!a->field().is_finite()) throw std::invalid_argument("enumerate_modules needs a finite field");
  if (cap.dims.size() != static_cast<std::size_t>(a->num_vertices()))
    throw std::invalid_argument("enumeration cap has the wrong number of vertices");
  const std::uint64_t work = enumeration_work(a, cap);
  if (work > work_limit) throw WorkLimitExceeded(work, work_limit);
  const std::string key = std::to_string(a->fingerprint()) + "|" + a->field().name() + "|" + cap.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  const std::uint32_t p = a->field().p;
  std::vector<Module> out;
  for (const auto& d : dimension_vectors(cap)) {
    Layout l = layout_of(*a, d);
    Orbits orb(*a, l, p);
    const std::uint64_t n = ipow(p, l.entries, work_limit);
    std::vector<bool> visited(n, false);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      if (visited[idx]) continue;
      orb.sweep(idx, visited);
      bool ok = false;
      Module m = orb.module(idx, a, &ok);
      if (ok) out.push_back(std::move(m));
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(key, out);
  return out;
}

}  // namespace trigor::oracle
