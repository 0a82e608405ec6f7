#include "grouph1/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace grouph1 {

namespace {

Index umax_for(Index g) { return std::min<Index>(5, g - 1); }

// Indices j for which b_j is a generator.
std::vector<Index> b_indices(Index g) {
  if (g == 3) return {};
  if (g == 4 || g % 2 == 1) return {1};
  std::vector<Index> out;
  for (Index j = 0; j <= (g - 2) / 2; ++j) out.push_back(j);
  return out;
}

std::string sym(char family, Index j) {
  return std::string(1, family) + std::to_string(j);
}

// "a2 a3 ... a5" style products.
std::string run(char family, Index lo, Index hi) {
  std::ostringstream os;
  for (Index j = lo; j <= hi; ++j) {
    if (j > lo) os << ' ';
    os << sym(family, j);
  }
  return os.str();
}

void require_range(Index j, Index lo, Index hi, const char* what) {
  if (j < lo || j > hi)
    throw DimensionMismatch(std::string(what) + " index " + std::to_string(j) +
                            " out of range " + std::to_string(lo) + ".." +
                            std::to_string(hi));
}

}  // namespace

IntMatrix a_action(Index g, Index j) {
  require_range(j, 1, g - 1, "a");
  IntMatrix m = IntMatrix::Identity(g, g);
  m(j - 1, j - 1) = 0;
  m(j - 1, j) = 1;
  m(j, j - 1) = -1;
  m(j, j) = 2;
  return m;
}

IntMatrix a_action_inverse(Index g, Index j) {
  require_range(j, 1, g - 1, "a");
  IntMatrix m = IntMatrix::Identity(g, g);
  m(j - 1, j - 1) = 2;
  m(j - 1, j) = -1;
  m(j, j - 1) = 1;
  m(j, j) = 0;
  return m;
}

IntMatrix u_action(Index g, Index j) {
  require_range(j, 1, g - 1, "u");
  IntMatrix m = IntMatrix::Identity(g, g);
  m(j - 1, j - 1) = 0;
  m(j - 1, j) = 1;
  m(j, j - 1) = 1;
  m(j, j) = 0;
  return m;
}

IntMatrix b_action(Index g, Index j) {
  require_range(2 * j + 2, 2, g, "b block");
  IntMatrix m = IntMatrix::Identity(g, g);
  for (Index r = 0; r < 2 * j + 2; ++r)
    for (Index c = 0; c < 2 * j + 2; ++c) m(r, c) += (c % 2 == 0 ? -1 : 1);
  return m;
}

IntMatrix b_action_inverse(Index g, Index j) {
  require_range(2 * j + 2, 2, g, "b block");
  IntMatrix m = IntMatrix::Identity(g, g);
  for (Index r = 0; r < 2 * j + 2; ++r)
    for (Index c = 0; c < 2 * j + 2; ++c) m(r, c) += (c % 2 == 0 ? 1 : -1);
  return m;
}

IntMatrix rho_action(Index g) {
  return IntMatrix(-IntMatrix::Identity(g, g));
}

GroupPresentation mcg_presentation(const SurfaceSpec& spec) {
  if (!spec.supported()) throw UnsupportedSurface(spec);
  const Index g = spec.genus;
  const Index umax = umax_for(g);
  const std::vector<Index> bjs = b_indices(g);
  const bool closed = spec.boundary == 0;

  std::ostringstream t;
  t << "group mcg_n" << g << "_s" << spec.boundary << "\n";
  t << "gen";
  for (Index j = 1; j <= g - 1; ++j) t << ' ' << sym('a', j);
  for (Index j = 1; j <= umax; ++j) t << ' ' << sym('u', j);
  for (Index j : bjs) t << ' ' << sym('b', j);
  if (closed) t << " rho";
  t << "\n";

  const auto rel = [&t](const std::string& label, const std::string& lhs,
                        const std::string& rhs) {
    t << "rel " << label << ": " << lhs << " = " << rhs << "\n";
  };

  if (g >= 4)
    for (Index j = 1; j <= g - 1; ++j)
      for (Index k = j + 2; k <= g - 1; ++k)
        rel("A1[" + std::to_string(j) + "," + std::to_string(k) + "]",
            sym('a', j) + " " + sym('a', k), sym('a', k) + " " + sym('a', j));
  for (Index j = 1; j <= g - 2; ++j)
    rel("A2[" + std::to_string(j) + "]",
        sym('a', j) + " " + sym('a', j + 1) + " " + sym('a', j),
        sym('a', j + 1) + " " + sym('a', j) + " " + sym('a', j + 1));
  if (g >= 4)
    for (Index j = 1; j <= g - 1; ++j) {
      if (j == 4) continue;
      rel("A3[" + std::to_string(j) + "]", sym('a', j) + " b1",
          "b1 " + sym('a', j));
    }
  if (g >= 5) rel("A4", "b1 a4 b1", "a4 b1 a4");
  if (g >= 5) rel("A5", "(" + run('a', 2, 4) + " b1)^10", "(" + run('a', 1, 4) + " b1)^6");
  if (g >= 7) rel("A6", "(" + run('a', 2, 6) + " b1)^12", "(" + run('a', 1, 6) + " b1)^9");
  if (g >= 4) rel("B1", "u1 u3", "u3 u1");
  rel("B2", "u1 u2 u1", "u2 u1 u2");
  if (g >= 4)
    for (Index j = 3; j <= g - 1; ++j)
      rel("C1[" + std::to_string(j) + "]", "u1 " + sym('a', j),
          sym('a', j) + " u1");
  rel("C2", "a1 u2 u1", "u2 u1 a2");
  rel("C4", "a1 u1 a1", "u1");
  for (Index j = 1; j <= umax - 1; ++j)
    rel("C5[" + std::to_string(j) + "]",
        sym('u', j + 1) + " " + sym('a', j) + " " + sym('a', j + 1) + " " +
            sym('u', j),
        sym('a', j) + " " + sym('a', j + 1));
  if (g >= 4)
    rel("C6", "(u3 b1)^2", "(" + run('a', 1, 3) + ")^2 (" + run('u', 1, 3) + ")^2");
  if (g >= 6) rel("C7", "u5 b1", "b1 u5");
  if (g >= 5)
    rel("C8", "b1 a4 u4",
        "a4 u4 a4 a3 a2 a1 u1 u2 u3 u4 b1");
  if (g >= 6 && g % 2 == 0) {
    rel("A7", "b0", "a1");
    for (Index j = 1; j <= (g - 4) / 2; ++j)
      rel("A8[" + std::to_string(j) + "]",
          sym('b', j + 1) + " (" + sym('b', j - 1) + " " +
              run('a', 2 * j, 2 * j + 3) + ")^6",
          "(" + sym('b', j - 1) + " " + run('a', 2 * j, 2 * j + 3) + " " +
              sym('b', j) + ")^5");
    if (g == 6) rel("A9a", "b2 b1", "b1 b2");
    if (g >= 8)
      rel("A9b", sym('b', (g - 2) / 2) + " " + sym('a', g - 5),
          sym('a', g - 5) + " " + sym('b', (g - 2) / 2));
  }
  if (closed) {
    rel("B3", "(" + run('a', 1, g - 1) + ")^" + std::to_string(g),
        g % 2 == 0 ? "" : "rho");
    for (Index j = 1; j <= g - 1; ++j)
      rel("D1[" + std::to_string(j) + "]", "rho " + sym('a', j),
          sym('a', j) + " rho");
    rel("D2", "u1 rho u1", "rho");
    rel("E", "rho^2", "");
    rel("F", "(u1 " + run('a', 1, g - 1) + " rho)^" + std::to_string(g - 1), "");
  }
  return parse_presentation(t.str());
}

MatrixRepresentation mcg_action(const SurfaceSpec& spec) {
  if (!spec.supported()) throw UnsupportedSurface(spec);
  const Index g = spec.genus;
  MatrixRepresentation rep(g);
  for (Index j = 1; j <= g - 1; ++j)
    rep.add_generator(sym('a', j), a_action(g, j), a_action_inverse(g, j));
  for (Index j = 1; j <= umax_for(g); ++j)
    rep.add_generator(sym('u', j), u_action(g, j), u_action(g, j));
  for (Index j : b_indices(g))
    rep.add_generator(sym('b', j), b_action(g, j), b_action_inverse(g, j));
  if (spec.boundary == 0)
    rep.add_generator("rho", rho_action(g), rho_action(g));
  return rep;
}

CoefficientModule mcg_module(const SurfaceSpec& spec) {
  if (!spec.supported()) throw UnsupportedSurface(spec);
  CoefficientModule m;
  m.rank = spec.genus;
  m.description = "H1(N_" + std::to_string(spec.genus) + "," +
                  std::to_string(spec.boundary) + ")";
  if (spec.boundary == 0)
    m.relation_vectors.push_back(IntVector::Constant(spec.genus, 2));
  return m;
}

AbelianGroupStructure<Int> expected_h1(const SurfaceSpec& spec) {
  if (!spec.supported()) throw UnsupportedSurface(spec);
  AbelianGroupStructure<Int> out;
  const std::size_t copies = spec.genus <= 6 ? 3 : 2;
  out.torsion.assign(copies, Int(2));
  return out;
}

std::vector<ChainVector> KernelCandidates::with_sign(FamilySign sign) const {
  std::vector<ChainVector> out = common;
  const auto& family = sign == FamilySign::plus ? odd_column_plus : odd_column_minus;
  out.insert(out.end(), family.begin(), family.end());
  return out;
}

KernelCandidates kernel_generator_candidates(const SurfaceSpec& spec) {
  if (!spec.supported()) throw UnsupportedSurface(spec);
  const GroupPresentation p = mcg_presentation(spec);
  const Index g = spec.genus;
  const Index umax = umax_for(g);
  const std::vector<Index> bjs = b_indices(g);
  const bool closed = spec.boundary == 0;
  const Index n = p.generator_count() * g;

  const auto pos = [&p, g](const std::string& name, Index i) {
    return chain_position(*p.generator_index(name), i, g);
  };
  const auto zero = [n] { return ChainVector(ChainVector::Zero(n)); };

  KernelCandidates out;
  auto& common = out.common;

  // Single a columns away from the twist pair, then the paired diagonal sums.
  for (Index j = 1; j <= g - 1; ++j)
    for (Index i = 1; i <= g; ++i) {
      if (i == j || i == j + 1) continue;
      ChainVector v = zero();
      v(pos(sym('a', j), i)) = 1;
      common.push_back(std::move(v));
    }
  for (Index j = 1; j <= g - 1; ++j) {
    ChainVector v = zero();
    v(pos(sym('a', j), j)) = 1;
    v(pos(sym('a', j), j + 1)) = 1;
    common.push_back(std::move(v));
  }
  // Same two families for the u block.
  for (Index j = 1; j <= umax; ++j)
    for (Index i = 1; i <= g; ++i) {
      if (i == j || i == j + 1) continue;
      ChainVector v = zero();
      v(pos(sym('u', j), i)) = 1;
      common.push_back(std::move(v));
    }
  for (Index j = 1; j <= umax; ++j) {
    ChainVector v = zero();
    v(pos(sym('u', j), j)) = 1;
    v(pos(sym('u', j), j + 1)) = 1;
    common.push_back(std::move(v));
  }
  // Mixed a/u diagonal differences for adjacent indices.
  for (Index j = 1; j <= umax - 1; ++j) {
    ChainVector v = zero();
    v(pos(sym('a', j), j)) = 1;
    v(pos(sym('a', j + 1), j + 1)) = -1;
    v(pos(sym('u', j), j)) = 1;
    v(pos(sym('u', j + 1), j + 1)) = 1;
    common.push_back(std::move(v));
  }
  if (closed) {
    for (Index j = 1; j <= g - 1; ++j) {
      ChainVector v = zero();
      v(pos(sym('a', j), j)) = 2;
      v(pos("rho", j)) += 1;
      v(pos("rho", j + 1)) += 1;
      common.push_back(std::move(v));
    }
    ChainVector v = zero();
    v(pos("a1", 1)) = 1;
    v(pos("rho", 1)) = 1;
    v(pos("u1", 1)) = -1;
    common.push_back(std::move(v));
  }
  // b columns beyond the filled block.
  for (Index j : bjs)
    for (Index i = 2 * j + 3; i <= g; ++i) {
      ChainVector v = zero();
      v(pos(sym('b', j), i)) = 1;
      common.push_back(std::move(v));
    }
  // Even b columns paired with the first.
  for (Index j : bjs)
    for (Index i = 1; i <= j + 1; ++i) {
      ChainVector v = zero();
      v(pos(sym('b', j), 2 * i)) = 1;
      v(pos(sym('b', j), 1)) += 1;
      common.push_back(std::move(v));
    }
  // First b column against the odd a diagonal.
  for (Index j : bjs) {
    ChainVector v = zero();
    v(pos(sym('b', j), 1)) = 1;
    for (Index t = 0; t <= j; ++t) v(pos(sym('a', 2 * t + 1), 2 * t + 1)) -= 1;
    common.push_back(std::move(v));
  }
  if (closed) {
    ChainVector v = zero();
    if (g % 2 == 1) {
      v(pos("a1", 1)) = 1;
      for (Index i = 2; i <= g - 1; i += 2) v(pos(sym('a', i), i)) = 2;
      v(pos("u1", 1)) = -1;
    } else {
      for (Index i = 1; i <= g - 1; i += 2) v(pos(sym('a', i), i)) = 2;
    }
    common.push_back(std::move(v));
  }
  // The ambiguous family: odd b columns paired with the first, either sign.
  for (Index j : bjs)
    for (Index i = 1; i <= j; ++i) {
      ChainVector minus = zero();
      minus(pos(sym('b', j), 2 * i + 1)) = 1;
      minus(pos(sym('b', j), 1)) -= 1;
      out.odd_column_minus.push_back(std::move(minus));
      ChainVector plus = zero();
      plus(pos(sym('b', j), 2 * i + 1)) = 1;
      plus(pos(sym('b', j), 1)) += 1;
      out.odd_column_plus.push_back(std::move(plus));
    }
  return out;
}

}  // namespace grouph1
