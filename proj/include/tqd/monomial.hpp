#pragma once

// Monomial operators: dim x dim matrices with exactly one nonzero entry per
// row and column, entries r-th roots of unity.  Stored as a permutation plus
// a scalar exponent per basis vector: v_i |-> zeta^{scal[i]} * v_{perm[i]}.
// Exponents are kept normalized in [0, r), so equality and ordering are
// plain field-wise comparisons and can serve as closure fingerprints.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqd {

// Hard cap on operator dimension; |G|^(2n) beyond this is out of desk scale
// and the dense perm/scal representation would not fit anyway.
inline constexpr std::int64_t kMaxMonomialDim = std::int64_t{1} << 22;

struct MonomialOp {
  int r = 1;
  std::vector<int> perm;
  std::vector<int> scal;

  int dim() const { return static_cast<int>(perm.size()); }

  friend auto operator<=>(const MonomialOp&, const MonomialOp&) = default;

  bool is_identity() const {
    for (int i = 0; i < dim(); ++i)
      if (perm[static_cast<std::size_t>(i)] != i || scal[static_cast<std::size_t>(i)] != 0)
        return false;
    return true;
  }
};

inline MonomialOp monomial_identity(int dim, int r) {
  if (r < 1) throw std::invalid_argument("monomial_identity: r must be >= 1");
  if (dim < 1 || dim > kMaxMonomialDim)
    throw std::invalid_argument("monomial_identity: dim out of range");
  MonomialOp op;
  op.r = r;
  op.perm.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) op.perm[static_cast<std::size_t>(i)] = i;
  op.scal.assign(static_cast<std::size_t>(dim), 0);
  return op;
}

// Full validation for operators built from raw data (files, hand tables);
// operators produced by composition stay valid by construction.
inline void validate_monomial(const MonomialOp& op) {
  if (op.r < 1) throw std::invalid_argument("MonomialOp: r must be >= 1");
  std::int64_t d = static_cast<std::int64_t>(op.perm.size());
  if (d < 1 || d > kMaxMonomialDim)
    throw std::invalid_argument("MonomialOp: dim " + std::to_string(d) + " out of range (cap " +
                                std::to_string(kMaxMonomialDim) + ")");
  if (op.scal.size() != op.perm.size())
    throw std::invalid_argument("MonomialOp: perm/scal size mismatch");
  std::vector<char> hit(op.perm.size(), 0);
  for (std::size_t i = 0; i < op.perm.size(); ++i) {
    int p = op.perm[i];
    if (p < 0 || p >= static_cast<int>(op.perm.size()) || hit[static_cast<std::size_t>(p)])
      throw std::invalid_argument("MonomialOp: perm is not a bijection");
    hit[static_cast<std::size_t>(p)] = 1;
    if (op.scal[i] < 0 || op.scal[i] >= op.r)
      throw std::invalid_argument("MonomialOp: scalar exponent out of [0, r)");
  }
}

// F * G = F after G: (F*G)(v_i) = zeta^{G.scal[i] + F.scal[G.perm[i]]} v_{F.perm[G.perm[i]]}
inline MonomialOp operator*(const MonomialOp& F, const MonomialOp& G) {
  if (F.r != G.r || F.perm.size() != G.perm.size())
    throw std::invalid_argument("MonomialOp composition: dim or r mismatch");
  MonomialOp out;
  out.r = F.r;
  std::size_t d = G.perm.size();
  out.perm.resize(d);
  out.scal.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = static_cast<std::size_t>(G.perm[i]);
    out.perm[i] = F.perm[j];
    out.scal[i] = (G.scal[i] + F.scal[j]) % F.r;
  }
  return out;
}

inline MonomialOp inverse(const MonomialOp& op) {
  MonomialOp out;
  out.r = op.r;
  std::size_t d = op.perm.size();
  out.perm.resize(d);
  out.scal.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = static_cast<std::size_t>(op.perm[i]);
    out.perm[j] = static_cast<int>(i);
    out.scal[j] = (op.r - op.scal[i]) % op.r;
  }
  return out;
}

// Least k <= cap with op^k = identity, or nullopt.
inline std::optional<long long> element_order(const MonomialOp& op, long long cap) {
  if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
  MonomialOp acc = op;
  for (long long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * op;
  }
  return std::nullopt;
}

// --- serialization ----------------------------------------------------------
// `monop v1` / `r R dim M` / M lines `i perm[i] scal[i]`.

inline void write_monomial(std::ostream& out, const MonomialOp& op) {
  out << "monop v1\n";
  out << "r " << op.r << " dim " << op.dim() << "\n";
  for (int i = 0; i < op.dim(); ++i)
    out << i << " " << op.perm[static_cast<std::size_t>(i)] << " "
        << op.scal[static_cast<std::size_t>(i)] << "\n";
}

inline MonomialOp read_monomial(std::istream& in, const std::string& what = "monomial stream") {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> std::runtime_error {
    return std::runtime_error(what + ":" + std::to_string(lineno) + ": " + msg);
  };
  if (!next_content_line()) throw fail("missing `monop v1` header");
  {
    std::istringstream ls(line);
    std::string kw, ver;
    if (!(ls >> kw >> ver) || kw != "monop" || ver != "v1")
      throw fail("expected `monop v1` header");
  }
  if (!next_content_line()) throw fail("missing `r R dim M` line");
  int r = 0, d = 0;
  {
    std::istringstream ls(line);
    std::string kw1, kw2;
    if (!(ls >> kw1 >> r >> kw2 >> d) || kw1 != "r" || kw2 != "dim" || r < 1 || d < 1)
      throw fail("expected `r R dim M` with R, M >= 1");
  }
  if (d > kMaxMonomialDim) throw fail("dim exceeds cap " + std::to_string(kMaxMonomialDim));
  MonomialOp op;
  op.r = r;
  op.perm.assign(static_cast<std::size_t>(d), -1);
  op.scal.assign(static_cast<std::size_t>(d), -1);
  std::vector<char> have(static_cast<std::size_t>(d), 0);
  for (int k = 0; k < d; ++k) {
    if (!next_content_line()) throw fail("expected " + std::to_string(d) + " entry lines");
    std::istringstream ls(line);
    int i, p, s;
    if (!(ls >> i >> p >> s)) throw fail("expected `i perm[i] scal[i]`");
    if (i < 0 || i >= d) throw fail("row index out of range");
    if (have[static_cast<std::size_t>(i)]) throw fail("duplicate row " + std::to_string(i));
    have[static_cast<std::size_t>(i)] = 1;
    op.perm[static_cast<std::size_t>(i)] = p;
    op.scal[static_cast<std::size_t>(i)] = s;
  }
  validate_monomial(op);  // bijection + exponent range
  return op;
}

inline MonomialOp read_monomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open operator file: " + path);
  return read_monomial(in, path);
}

}  // namespace tqd
