#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrk/errors.hpp"
#include "qrk/realization.hpp"
#include "support/fixtures.hpp"

using namespace qrk;
using qrk::testing::load_fixture;

namespace {

const double kRoot2 = std::numbers::sqrt2;

OrthoHypergraph labelled(std::vector<std::pair<std::string, Ket>> atoms,
                         std::vector<std::vector<std::string>> contexts) {
  OrthoHypergraph h;
  for (auto& [id, k] : atoms) h.add_atom(id, k);
  for (auto& c : contexts) h.add_context(c);
  return h;
}

Ket random_real3(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return normalize({g(rng), g(rng), g(rng)});
}

}  // namespace

TEST_CASE("verify_realization") {
  const auto ok = labelled({{"x", normalize({1.0, 0.0})}, {"y", normalize({0.0, 1.0})}}, {{"x", "y"}});
  const auto r = verify_realization(ok);
  CHECK(r.pass);
  CHECK(r.dim == 2);
  CHECK(r.offending.empty());

  // (1,0,0) and (sqrt2/2, 1/2, 1/2) overlap by sqrt2/2.
  const auto bad = labelled({{"psi", normalize({1.0, 0.0, 0.0})},
                             {"phi", normalize({kRoot2 / 2, 0.5, 0.5})},
                             {"z", normalize({0.0, 0.0, 1.0})}},
                            {{"psi", "phi", "z"}});
  const auto rb = verify_realization(bad);
  CHECK_FALSE(rb.pass);
  REQUIRE(rb.offending.size() == 1);
  CHECK(std::abs(rb.residuals[0].max_overlap - kRoot2 / 2) < 1e-12);
}

TEST_CASE("verify_realization errors") {
  OrthoHypergraph missing;
  missing.add_atom("x", normalize({1.0, 0.0}));
  missing.add_atom("y");
  missing.add_context({"x", "y"});
  try {
    verify_realization(missing);
    FAIL("expected MissingLabel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingLabel);
  }

  const auto mixed = labelled({{"x", normalize({1.0, 0.0})}, {"y", normalize({0.0, 1.0, 0.0})}}, {{"x", "y"}});
  try {
    verify_realization(mixed);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }

  const auto short_ctx = labelled({{"x", normalize({1.0, 0.0, 0.0})}, {"y", normalize({0.0, 1.0, 0.0})}}, {{"x", "y"}});
  try {
    verify_realization(short_ctx);
    FAIL("expected ContextSizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContextSizeMismatch);
  }
}

TEST_CASE("gadget fixtures are realized by orthonormal contexts in R^3") {
  for (const char* name : {"tifs.json", "tits.json", "composed.json"}) {
    CAPTURE(name);
    const auto h = load_fixture(name);
    const auto r = verify_realization(h);
    CHECK(r.pass);
    CHECK(r.dim == 3);
    // Terminals carry the prescribed rays.
    CHECK(collinear(*h.atom("PSI").label, normalize({1.0, 0.0, 0.0}), 1e-12));
    CHECK(collinear(*h.atom("PHI").label, normalize({kRoot2, 1.0, 1.0}), 1e-12));
  }
}

TEST_CASE("property: realization verdict ignores per-atom phases") {
  const auto h = load_fixture("tits.json");
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  OrthoHypergraph rotated;
  for (const auto& a : h.atoms()) rotated.add_atom(a.id, a.label->with_phase(angle(rng)));
  for (const auto& c : h.contexts()) rotated.add_context(c);
  const auto r0 = verify_realization(h);
  const auto r1 = verify_realization(rotated);
  CHECK(r1.pass == r0.pass);
  for (std::size_t i = 0; i < r0.residuals.size(); ++i) {
    CHECK(std::abs(r0.residuals[i].max_overlap - r1.residuals[i].max_overlap) < 1e-12);
  }
}

TEST_CASE("complete_context_d3") {
  auto w = complete_context_d3(normalize({1.0, 0.0, 0.0}), normalize({0.0, 1.0, 0.0}));
  CHECK(collinear(w, normalize({0.0, 0.0, 1.0}), 1e-12));

  w = complete_context_d3(normalize({1.0, 0.0, 0.0}), normalize({0.0, 1.0, 1.0}));
  CHECK(collinear(w, normalize({0.0, 1.0, -1.0}), 1e-12));

  try {
    complete_context_d3(normalize({1.0, 0.0, 0.0}), normalize({1.0, 0.0, 0.0}));
    FAIL("expected NotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrthogonal);
  }
  CHECK_THROWS_AS(complete_context_d3(normalize({1.0, 0.0}), normalize({0.0, 1.0})), Error);
}

TEST_CASE("property: completed contexts always verify, including complex vectors") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    std::vector<Complex> a = {{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
    const Ket u = normalize(std::span<const Complex>(a));
    const Ket r = t % 2 ? random_real3(rng) : normalize({Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng))});
    // v: component of r orthogonal to u.
    const Complex c = inner(u, r);
    std::vector<Complex> vv(3);
    for (std::size_t i = 0; i < 3; ++i) vv[i] = r[i] - c * u[i];
    const Ket v = normalize(std::span<const Complex>(vv));
    const Ket w = complete_context_d3(u, v);
    const auto h = labelled({{"u", u}, {"v", v}, {"w", w}}, {{"u", "v", "w"}});
    CHECK(verify_realization(h).pass);
  }
}

TEST_CASE("property: atoms sharing a context in a passing realization have zero Born probability") {
  const auto h = load_fixture("composed.json");
  REQUIRE(verify_realization(h).pass);
  for (const auto& ctx : h.contexts()) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      for (std::size_t j = i + 1; j < ctx.size(); ++j) {
        CHECK(born(*h.atom(ctx[i]).label, *h.atom(ctx[j]).label) < kTolerance);
      }
    }
  }
}

TEST_CASE("terminal_gap") {
  const auto g = terminal_gap(load_fixture("tifs.json"), "PSI", "PHI");
  CHECK(g.classical.relation == Relation::TrueImpliesFalse);
  CHECK(std::abs(g.quantum - 0.5) < 1e-12);
  CHECK_FALSE(g.warning.has_value());

  const auto t = terminal_gap(load_fixture("tits.json"), "PSI", "PHI");
  CHECK(t.classical.relation == Relation::TrueImpliesTrue);
  CHECK(std::abs(t.quantum - 0.5) < 1e-12);

  // The first context is {N, PHI, X}: orthogonal rays.
  const auto tifs = load_fixture("tifs.json");
  const auto& first = tifs.contexts().front();
  const auto o = terminal_gap(tifs, first[0], first[1]);
  CHECK(o.classical.relation == Relation::TrueImpliesFalse);
  CHECK(o.quantum < 1e-12);
  CHECK(o.warning.has_value());

  CHECK_THROWS_AS(terminal_gap(tifs, "PSI", "PSI"), Error);
  OrthoHypergraph bare = qrk::testing::single_context();
  try {
    terminal_gap(bare, "a", "b");
    FAIL("expected MissingLabel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingLabel);
  }
}
