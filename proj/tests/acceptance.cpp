// Acceptance run: one PASS/FAIL line per criterion, with timings. Exit status
// is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pruferlab/deciders.hpp"
#include "pruferlab/polynomial.hpp"
#include "pruferlab/snf.hpp"
#include "pruferlab/suite.hpp"
#include "pruferlab/zoo.hpp"

using namespace pruferlab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
};

void require_fixture(Outcome& o, const FixtureResult& f) {
  for (const auto& c : f.checks) o.require(c.passed, f.name + ": " + c.what + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

void require_time(Outcome& o, double ms, double bound_ms, const std::string& what) {
  std::ostringstream os;
  os << what << " took " << ms << " ms, expected < " << bound_ms << " ms";
  o.require(ms < bound_ms, os.str());
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::vector<RingPtr> universe_rings(std::size_t max_order, const Limits& limits) {
  std::vector<RingPtr> out;
  for (const auto& u : enumerate_universe({max_order, 2}, limits)) out.push_back(eval_spec(u.ast, limits));
  return out;
}

bool contains_spec(const SearchResult& s, const std::string& spec) {
  for (const auto& m : s.matches)
    if (m.spec == spec) return true;
  return false;
}

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint64_t>(u128(a) * b % p); }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mul_mod(b, b, p))
    if (e & 1) r = mul_mod(r, b, p);
  return r;
}

// deterministic Miller-Rabin for 64-bit n
bool is_prime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  std::uint64_t d = n - 1;
  int s = 0;
  for (; d % 2 == 0; d /= 2) ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < s && composite; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t det_mod(const IntMatrix& u, std::uint64_t p) {
  const auto n = static_cast<std::size_t>(u.rows());
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) % static_cast<std::int64_t>(p);
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = det ? p - det : 0;
    }
    det = mul_mod(det, a[k][k], p);
    const auto inv = pow_mod(a[k][k], p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto f = mul_mod(a[i][k], inv, p);
      for (std::size_t j = k; j < n; ++j) a[i][j] = (a[i][j] + mul_mod(p - f, a[k][j], p)) % p;
    }
  }
  return det;
}

// det(U) = ±1 checked modulo enough primes below 2^61 that their product
// exceeds twice the Hadamard bound H: a residue s in {1, -1} common to all of
// them then forces det = s, since |det - s| <= H + 1.
bool unimodular(const IntMatrix& u) {
  const auto n = u.rows();
  if (n != u.cols()) return false;
  long double log2_bound = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    long double row = 0;
    for (Eigen::Index j = 0; j < n; ++j) row += static_cast<long double>(u(i, j)) * static_cast<long double>(u(i, j));
    log2_bound += 0.5L * std::log2(row);
  }
  int sign = 0;
  long double covered = 0;
  for (std::uint64_t p = (std::uint64_t{1} << 61) - 1; covered < log2_bound + 2; p -= 2) {
    if (!is_prime64(p)) continue;
    const auto det = det_mod(u, p);
    const int s = det == 1 ? 1 : det == p - 1 ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    covered += 60;
  }
  return sign != 0;
}

Outcome criterion_1() {
  Outcome o;
  const auto a = square_zero_content_fixture(2);
  require_fixture(o, a);
  require_time(o, a.ms, 1000, "order 16");
  const auto b = square_zero_content_fixture(3);
  require_fixture(o, b);
  require_time(o, b.ms, 30000, "order 64");
  return o;
}

Outcome single_fixture(const FixtureResult& f, double bound_ms) {
  Outcome o;
  require_fixture(o, f);
  require_time(o, f.ms, bound_ms, f.name);
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const Limits limits;
  const UniverseParams params{64, 2};
  const auto catalog = build_catalog(params, limits);
  const auto hierarchy = hierarchy_audit(catalog);
  o.require(hierarchy.errors.empty(), hierarchy.errors.empty() ? "" : "classification skipped: " + hierarchy.errors.front());
  o.require(hierarchy.violations.empty(),
            hierarchy.violations.empty() ? "" : "hierarchy violated: " + hierarchy.violations.front());
  const auto transfer = transfer_audit(enumerate_universe(params, limits), limits);
  o.require(transfer.errors.empty(), transfer.errors.empty() ? "" : "retract skipped: " + transfer.errors.front());
  o.require(transfer.violated == 0, transfer.violations.empty() ? "" : "VIOLATED: " + transfer.violations.front());
  o.require(transfer.retracts > 0, "no retracts in the universe");
  if (o.passed)
    o.detail = std::to_string(hierarchy.rings) + " rings, " + std::to_string(transfer.retracts) + " retracts, " +
               std::to_string(transfer.holds) + " HOLDS, " + std::to_string(transfer.vacuous) + " VACUOUS";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  Limits primary;
  primary.oracle_order = 0;  // deciders alone; the oracles run separately below
  std::size_t gauss = 0, arith = 0, wdim = 0;
  for (const auto& r : universe_rings(16, primary)) {
    const bool decided = is_gaussian(r).holds;
    const bool scanned = content_equality_scan(r, 2, 2).holds;
    o.require(decided == scanned, "Gaussian decider and (2,2) scan disagree on " + r->spec());
    ++gauss;
  }
  for (const auto& r : universe_rings(32, primary)) {
    const auto a = is_arithmetical(r, primary);
    o.require(!a.oracle_ran, "arithmetical decider ran its oracle");
    o.require(a.holds == arithmetical_by_factorization(r).holds,
              "arithmetical decider and I = HJ oracle disagree on " + r->spec());
    const auto w = wdim_classification(r, primary);
    o.require(w.wdim_le_one == all_ideals_flat(r).holds, "wdim decider and flatness oracle disagree on " + r->spec());
    ++arith;
    ++wdim;
  }
  if (o.passed)
    o.detail = "(a) " + std::to_string(gauss) + " rings, (b) " + std::to_string(arith) + " rings, (c) " +
               std::to_string(wdim) + " rings";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto catalog = build_catalog({16, 2});
  auto run = [&](const std::string& predicate) { return search(Predicate::parse(predicate), catalog); };
  const auto a = run("prufer && !gaussian");
  const auto b = run("gaussian && !arithmetical");
  const auto c = run("arithmetical && !wdim_le_one");
  const auto d = run("wdim_le_one && !arithmetical");
  o.require(contains_spec(a, "Triv(Z/4, Self)"), "prufer && !gaussian misses Triv(Z/4, Self)");
  o.require(contains_spec(b, "Triv(GF(2), ExtMod(GF(4)))"), "gaussian && !arithmetical misses Triv(GF(2), ExtMod(GF(4)))");
  o.require(contains_spec(c, "Triv(GF(2), Self)"), "arithmetical && !wdim_le_one misses Triv(GF(2), Self)");
  o.require(contains_spec(c, "Z/4"), "arithmetical && !wdim_le_one misses Z/4");
  o.require(d.matches.empty(), "wdim_le_one && !arithmetical is not empty");
  for (const auto* s : {&a, &b, &c, &d}) o.require(s->skipped.empty(), "entries skipped in " + s->predicate);
  if (o.passed)
    o.detail = std::to_string(a.matches.size()) + " / " + std::to_string(b.matches.size()) + " / " +
               std::to_string(c.matches.size()) + " matches, 0 for wdim_le_one && !arithmetical over " +
               std::to_string(catalog.entries.size()) + " rings";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(-20, 20);
  for (int t = 0; t < 1000 && o.passed; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    std::ostringstream id;
    id << "matrix " << t << " (" << m.rows() << "x" << m.cols() << ")";
    // U·M·V in 128-bit so an overflow cannot mask a mismatch
    bool product_ok = true;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        __int128 acc = 0;
        for (Eigen::Index k = 0; k < m.rows(); ++k)
          for (Eigen::Index l = 0; l < m.cols(); ++l) {
            __int128 term;
            if (__builtin_mul_overflow(static_cast<__int128>(s.U(i, k)) * m(k, l), static_cast<__int128>(s.V(l, j)), &term) ||
                __builtin_add_overflow(acc, term, &acc))
              product_ok = false;
          }
        if (acc != s.D(i, j)) product_ok = false;
      }
    o.require(product_ok, id.str() + ": U*M*V != D");
    o.require(unimodular(s.U), id.str() + ": U not unimodular");
    o.require(unimodular(s.V), id.str() + ": V not unimodular");
    const auto d = s.diagonal();
    for (Eigen::Index i = 0; i < s.D.rows(); ++i)
      for (Eigen::Index j = 0; j < s.D.cols(); ++j)
        if (i != j) o.require(s.D(i, j) == 0, id.str() + ": D not diagonal");
    for (std::size_t k = 0; k < d.size(); ++k) {
      o.require(d[k] >= 0, id.str() + ": negative diagonal entry");
      if (k + 1 < d.size()) o.require(d[k] == 0 ? d[k + 1] == 0 : d[k + 1] % d[k] == 0, id.str() + ": divisibility chain broken");
    }
  }
  if (o.passed) o.detail = "1000 matrices";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double bound_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Z/2^i ∝ Z/2^i, i = 2, 3: square-zero f with C(f)^2 != 0; not Gaussian, Prüfer, total quotient", 31000,
       criterion_1},
      {2, "F2 ∝ F2: arithmetical, wdim > 1, R(0,1) has a period-1 resolution", 1000,
       [] { return single_fixture(self_idealization_fixture(), 1000); }},
      {3, "F2 ∝ F4: Gaussian, not arithmetical, witness 0 ∝ F4", 1000,
       [] { return single_fixture(field_extension_fixture(), 1000); }},
      {4, "Z/4 ∝ Z/4/(2) Gaussian like Z/4; Z/4 ∝ Z/2 total quotient ring", 1000,
       [] { return single_fixture(residue_module_fixture(), 1000); }},
      {5, "hierarchy and transfer audit, order <= 64, depth <= 2", 300000, criterion_5},
      {6, "decider/oracle agreement: Gaussian vs (2,2) scan, arithmetical vs I = HJ, wdim vs flatness", 600000,
       criterion_6},
      {7, "separation searches over the order <= 16 universe", 120000, criterion_7},
      {8, "Smith normal form on 1000 random matrices up to 6x6", 10000, criterion_8},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(start);
    if (ms >= c.bound_ms) o.require(false, "over the time budget");
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << ms
              << " ms]" << (o.detail.empty() ? "" : " -- " + o.detail) << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
