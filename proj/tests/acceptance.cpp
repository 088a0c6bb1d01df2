// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exact-rational backend unless stated, integer coefficients in [-9, 9],
// seed 42, 1000 random samples per criterion. Exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hyper/cli.hpp"
#include "support.hpp"

#ifndef HYPERC_PATH
#error "HYPERC_PATH must point at the hyperc executable"
#endif

namespace {

using namespace hyper;
using hyper::testing::e;
using hyper::testing::Q;
using hyper::testing::Sampler;

constexpr std::uint64_t kSeed = 42;
constexpr long kRange = 9;
constexpr int kRandom = 1000;
const Tolerance kTol{1e-9, 1e-12};

/// Collects the first few problems of a criterion.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    if (++failures_ <= 3) notes_.push_back(what());
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  [[nodiscard]] bool ok() const { return failures_ == 0; }
  [[nodiscard]] std::size_t failures() const { return failures_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string show(const HNum<Q>& u) { return to_string(u); }

std::string triple(const HNum<Q>& a, const HNum<Q>& b, const HNum<Q>& c) {
  return "u1=" + show(a) + " u2=" + show(b) + " u3=" + show(c);
}

template <class F>
void random_triples(std::size_t dim, F&& f) {
  Sampler s(kSeed, kRange);
  for (int t = 0; t < kRandom; ++t) {
    auto a = s.next(dim), b = s.next(dim), c = s.next(dim);
    f(a, b, c);
  }
}

template <class F>
void random_and_basis_triples(F&& f) {
  random_triples(8, f);
  testing::for_each_basis_triple(8, f);
}

// ---------------------------------------------------------------------------

void oracle_agreement(Check& c) {
  const auto t = build_table(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      c.expect(mul_table(e(i), e(j), t) == mul(e(i), e(j)),
               [&] { return "basis pair " + std::to_string(i) + "," + std::to_string(j); });
  Sampler s(kSeed, kRange);
  for (int k = 0; k < kRandom; ++k) {
    auto a = s.next(8), b = s.next(8);
    c.expect(mul_table(a, b, t) == mul(a, b), [&] { return "a=" + show(a) + " b=" + show(b); });
  }
}

void norm_multiplicativity(Check& c) {
  Sampler s(kSeed, kRange);
  for (std::size_t d : {2, 4, 8})
    for (int k = 0; k < kRandom; ++k) {
      auto a = s.next(d), b = s.next(d);
      c.expect(norm_sq(mul(a, b)) == norm_sq(a) * norm_sq(b),
               [&] { return "a=" + show(a) + " b=" + show(b); });
    }
}

void sandwich(Check& c) {
  Sampler s(kSeed, kRange);
  for (int k = 0; k < kRandom; ++k) {
    auto u1 = s.next(8), u2 = s.next(8);
    const auto rhs = scale(Q(2 * inner(u1, u2)), u1) - scale(norm_sq(u1), u2);
    c.expect(mul(mul(u1, conj(u2)), u1) == rhs && mul(u1, mul(conj(u2), u1)) == rhs,
             [&] { return "u1=" + show(u1) + " u2=" + show(u2); });
  }
}

void pair_expansion(Check& c) {
  Sampler s(kSeed, kRange);
  for (int k = 0; k < kRandom; ++k) {
    auto a = s.next(8), b = s.next(8);
    c.expect(expand_product2(a, b) == mul(a, b), [&] { return "a=" + show(a) + " b=" + show(b); });
  }
}

void reconstruction(Check& c) {
  random_and_basis_triples([&](const auto& a, const auto& b, const auto& x) {
    const auto d = decompose_triple(a, b, x);
    const bool ok = d.product == mul(mul(a, conj(b)), x) &&
                    d.anticommutator + d.cross3 + d.associator == d.product &&
                    inner(d.anticommutator, d.cross3) == 0 &&
                    inner(d.anticommutator, d.associator) == 0 &&
                    inner(d.cross3, d.associator) == 0;
    c.expect(ok, [&] { return triple(a, b, x); });
  });
}

void parenthesization(Check& c) {
  random_triples(8, [&](const auto& a, const auto& b, const auto& x) {
    c.expect(acomm3(a, b, x) == acomm3_alt(a, b, x) && cross3(a, b, x) == cross3_alt(a, b, x) &&
                 assoc3(a, b, x) == assoc3_alt(a, b, x),
             [&] { return triple(a, b, x); });
  });
}

void closed_forms(Check& c) {
  random_and_basis_triples([&](const auto& a, const auto& b, const auto& x) {
    c.expect(acomm3_closed(a, b, x) == acomm3(a, b, x) && cross3_closed(a, b, x) == cross3(a, b, x),
             [&] { return triple(a, b, x); });
  });
}

void orthogonality(Check& c) {
  const auto i0 = unit<Q>(8);
  random_triples(8, [&](const auto& a, const auto& b, const auto& x) {
    const auto cr = cross3(a, b, x), as = assoc3(a, b, x);
    bool ok = true;
    for (const auto* u : {&a, &b, &x}) ok = ok && inner(cr, *u) == 0 && inner(as, *u) == 0;
    ok = ok && inner(as, i0) == 0 && inner(as, cross2(a, b)) == 0 &&
         inner(as, cross2(a, x)) == 0 && inner(as, cross2(b, x)) == 0;
    c.expect(ok, [&] { return triple(a, b, x); });
  });
}

void quadruple(Check& c) {
  Sampler s(kSeed, kRange);
  for (int k = 0; k < kRandom; ++k) {
    auto u1 = s.next(8), u2 = s.next(8), u3 = s.next(8), u4 = s.next(8);
    c.expect(inner(cross3(u1, u2, u3), u4) == -inner(cross3(u4, u2, u3), u1) &&
                 inner(assoc3(u1, u2, u3), u4) == -inner(assoc3(u4, u2, u3), u1),
             [&] { return triple(u1, u2, u3) + " u4=" + show(u4); });
  }
}

void subalgebra_vanishing(Check& c) {
  random_triples(4, [&](const auto& a, const auto& b, const auto& x) {
    c.expect(assoc3(a, b, x).is_zero(), [&] { return "dim 4: " + triple(a, b, x); });
  });
  const auto i0 = unit<Q>(8);
  Sampler s(kSeed, kRange);
  for (int k = 0; k < kRandom; ++k) {
    auto v = s.next(8), w = s.next(8);
    c.expect(assoc3(v, w, cross2(v, w)).is_zero() && assoc3(cross2(v, w), v, w).is_zero() &&
                 assoc3(i0, v, w).is_zero() && assoc3(v, i0, w).is_zero() &&
                 assoc3(v, w, i0).is_zero(),
             [&] { return "v=" + show(v) + " w=" + show(w); });
  }
}

void norm_sum(Check& c) {
  random_triples(8, [&](const auto& a, const auto& b, const auto& x) {
    const auto d = decompose_triple(a, b, x);
    c.expect(norm_sq(d.anticommutator) + norm_sq(d.cross3) + norm_sq(d.associator) ==
                 norm_sq(a) * norm_sq(b) * norm_sq(x),
             [&] { return triple(a, b, x); });
  });
}

void norm_closed_forms(Check& c) {
  std::size_t mismatches[3] = {0, 0, 0};
  std::optional<std::string> witness[3];
  random_triples(8, [&](const auto& a, const auto& b, const auto& x) {
    const auto d = decompose_triple(a, b, x);
    const bool ok[3] = {norm_sq_acomm3(a, b, x) == norm_sq(d.anticommutator),
                        norm_sq_cross3(a, b, x) == norm_sq(d.cross3),
                        norm_sq_assoc3(a, b, x) == norm_sq(d.associator)};
    for (int k = 0; k < 3; ++k)
      if (!ok[k] && mismatches[k]++ == 0) witness[k] = triple(a, b, x);
    c.expect(ok[0] && ok[1] && ok[2], [&] { return triple(a, b, x); });
  });
  const char* names[3] = {"|acomm3|^2", "|cross3|^2", "|assoc3|^2"};
  for (int k = 0; k < 3; ++k)
    c.note(std::string(names[k]) + " as printed: " + std::to_string(mismatches[k]) +
           " discrepancies" + (witness[k] ? ", first at " + *witness[k] : ""));
}

void mirror_and_parity(Check& c) {
  random_triples(8, [&](const auto& a, const auto& b, const auto& x) {
    const auto d = decompose_triple(a, b, x);
    const auto dc = decompose_triple(conj(a), conj(b), conj(x));
    c.expect(mirror_product(a, b, x) == d.anticommutator - d.cross3 + d.associator &&
                 conj(dc.anticommutator) == d.anticommutator &&
                 conj(dc.cross3) == negate(d.cross3) && conj(dc.associator) == d.associator,
             [&] { return triple(a, b, x); });
  });
}

void okubo(Check& c) {
  random_and_basis_triples([&](const auto& a, const auto& b, const auto& x) {
    c.expect(okubo_rhs(a, b, x) == mul(mul(a, b), x), [&] { return triple(a, b, x); });
  });
}

void binary64_parity(Check& c) {
  using D = HNum<double>;
  auto to_d = [](const HNum<Q>& u) { return testing::to_double<double>(u); };
  auto near_v = [&](const D& x, const D& y) { return testing::near(x, y, kTol); };
  auto near_s = [&](double x, double y) { return testing::near(x, y, kTol); };

  Sampler s(kSeed, kRange);
  for (std::size_t d : {2, 4, 8})
    for (int k = 0; k < kRandom; ++k) {
      auto a = to_d(s.next(d)), b = to_d(s.next(d));
      c.expect(near_s(norm_sq(mul(a, b)), norm_sq(a) * norm_sq(b)),
               [&] { return "norm multiplicativity a=" + to_string(a); });
    }
  random_and_basis_triples([&](const auto& qa, const auto& qb, const auto& qx) {
    const D a = to_d(qa), b = to_d(qb), x = to_d(qx);
    const auto d = decompose_triple(a, b, x);
    const double scale = std::max({std::fabs(norm_sq(a) * norm_sq(b) * norm_sq(x)), 1.0});
    const bool ok =
        near_v(d.anticommutator + d.cross3 + d.associator, mul(mul(a, conj(b)), x)) &&
        std::fabs(inner(d.anticommutator, d.cross3)) <= kTol.bound(scale) &&
        std::fabs(inner(d.anticommutator, d.associator)) <= kTol.bound(scale) &&
        std::fabs(inner(d.cross3, d.associator)) <= kTol.bound(scale) &&
        near_v(okubo_rhs(a, b, x), mul(mul(a, b), x));
    c.expect(ok, [&] { return triple(qa, qb, qx); });
  });
  random_triples(8, [&](const auto& qa, const auto& qb, const auto& qx) {
    const D a = to_d(qa), b = to_d(qb), x = to_d(qx);
    const auto d = decompose_triple(a, b, x);
    c.expect(near_s(norm_sq(d.anticommutator) + norm_sq(d.cross3) + norm_sq(d.associator),
                    norm_sq(a) * norm_sq(b) * norm_sq(x)),
             [&] { return "norm sum " + triple(qa, qb, qx); });
  });
}

struct ProcessResult {
  int code = -1;
  std::string out;
};

ProcessResult run_process(const std::string& cmd) {
  ProcessResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void command_line(Check& c) {
  const std::string exe = HYPERC_PATH;
  auto suite1 = run_process(exe + " suite");
  auto suite2 = run_process(exe + " suite");
  c.expect(suite1.code == 0, [&] { return "suite exit " + std::to_string(suite1.code); });
  c.expect(suite1.out.find("\nFAIL") == std::string::npos && !suite1.out.starts_with("FAIL"),
           [] { return std::string("suite reported a FAIL"); });
  c.expect(suite1.out == suite2.out, [] { return std::string("suite output differs between runs"); });

  const auto path = std::filesystem::temp_directory_path() / "hyperc_acceptance_assoc.hid";
  std::ofstream(path) << "# octonions do not associate\n(u1*u2)*u3 == u1*(u2*u3)\n";
  auto check1 = run_process(exe + " check --format json " + path.string());
  auto check2 = run_process(exe + " check --format json " + path.string());
  std::filesystem::remove(path);
  c.expect(check1.code == 1, [&] { return "check exit " + std::to_string(check1.code); });
  bool witness = false;
  try {
    auto j = nlohmann::json::parse(check1.out);
    witness = j["status"] == "FAIL" && j["witness"].is_object() && j["witness"].size() == 3;
  } catch (const std::exception&) {
  }
  c.expect(witness, [&] { return "no witness in: " + check1.out; });
  c.expect(check1.out == check2.out, [] { return std::string("check output differs between runs"); });
  c.note("suite: " + std::to_string(std::count(suite1.out.begin(), suite1.out.end(), '\n')) +
         " output lines, exit " + std::to_string(suite1.code));
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"AC01 oracle agreement: doubling product = structure table (64 basis pairs + 1000 random)", oracle_agreement},
      {"AC02 norm multiplicativity, dims 2/4/8 x 1000 pairs", norm_multiplicativity},
      {"AC03 sandwich identity, both parenthesizations, 1000 pairs", sandwich},
      {"AC04 pair expansion equals product, 1000 pairs", pair_expansion},
      {"AC05 triple reconstruction + mutual orthogonality, 1000 random + 512 basis", reconstruction},
      {"AC06 parenthesization variants of the three brackets agree, 1000 triples", parenthesization},
      {"AC07 closed forms of anticommutator and cross3, 1000 random + 512 basis", closed_forms},
      {"AC08 orthogonality battery (cross3 x3, associator x7), 1000 triples", orthogonality},
      {"AC09 quadruple mixed product antisymmetry, 1000 quadruples", quadruple},
      {"AC10 associator vanishes on quaternion subalgebras", subalgebra_vanishing},
      {"AC11 squared lengths sum to product of norms, 1000 triples", norm_sum},
      {"AC12 Gram-determinant norm formulas equal definitional norms, 1000 triples", norm_closed_forms},
      {"AC13 mirrored product and conjugation parity, 1000 triples", mirror_and_parity},
      {"AC14 unconjugated triple product formula, 1000 random + 512 basis", okubo},
      {"AC15 binary64 parity of AC02/05/11/14 within relative 1e-9", binary64_parity},
      {"AC16 CLI: suite exits 0, associativity check exits 1 with witness, byte-stable", command_line},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    crit.run(c);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << crit.name << "  (" << ms << " ms)\n";
    for (const auto& n : c.notes()) std::cout << "       " << n << '\n';
    if (!c.ok()) {
      std::cout << "       " << c.failures() << " failing cases\n";
      ++failed;
    }
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria)
            << " acceptance criteria passed\n";
  return failed;
}
