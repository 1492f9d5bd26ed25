#include <doctest.h>

#include "pruferlab/deciders.hpp"
#include "pruferlab/report.hpp"
#include "rings.hpp"

using namespace pruferlab;
using namespace fixtures;

TEST_CASE("total quotient rings") {
  CHECK(is_total_quotient_ring(*triv_self(4)).holds);
  CHECK(is_total_quotient_ring(*triv_quot(4, 2)).holds);
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(is_total_quotient_ring(*make_cyclic_ring(n)).holds);
}

TEST_CASE("prufer") {
  auto p = is_prufer(triv_self(4));
  CHECK(p.holds);
  CHECK(p.regular == 1);
  CHECK(is_prufer(gf4()).holds);
  CHECK(is_prufer(f2_f4()).holds);
}

TEST_CASE("gaussian") {
  auto g = is_gaussian(triv_self(4));
  CHECK_FALSE(g.holds);
  REQUIRE(g.witness);
  auto r = triv_self(4);
  const auto& m = r->maximal_ideals().front();
  auto w = is_gaussian(r);
  CHECK(m.contains(w.witness->first));
  CHECK(m.contains(w.witness->second));
  CHECK(is_gaussian(f2_f4()).holds);
  CHECK(is_gaussian(triv_quot(4, 2)).holds);
  CHECK(is_gaussian(make_cyclic_ring(4)).holds);
}

TEST_CASE("arithmetical") {
  auto d = is_arithmetical(triv_self(2));
  CHECK(d.holds);
  CHECK(d.oracle_ran);

  auto r = f2_f4();
  auto a = is_arithmetical(r);
  CHECK_FALSE(a.holds);
  REQUIRE(a.witness);
  CHECK(a.witness->elements().to_vector() == std::vector<Index>{0, 1, 2, 3});  // 0 ∝ F4

  auto s = triv_quot(4, 2);
  auto b = is_arithmetical(s);
  CHECK_FALSE(b.holds);
  CHECK(*b.witness == ideal_generated_by(s, {pair(s, 2, 0), pair(s, 0, 1)}));

  CHECK_FALSE(arithmetical_by_factorization(r).holds);
  CHECK(arithmetical_by_factorization(make_cyclic_ring(12)).holds);
}

TEST_CASE("weak global dimension") {
  auto z6 = wdim_classification(make_cyclic_ring(6));
  CHECK(z6.wdim_le_one);
  CHECK(z6.oracle_ran);
  CHECK(z6.wdim_infinite_certified == false);

  auto d = wdim_classification(triv_self(2));
  CHECK_FALSE(d.wdim_le_one);
  CHECK(d.wdim_infinite_certified == true);

  for (const auto& r : {triv_self(4), f2_f4(), triv_quot(4, 2), triv_self(gf4())}) {
    CAPTURE(r->spec());
    CHECK_FALSE(wdim_classification(r).wdim_le_one);
  }
}

TEST_CASE("strongly prufer and (CH)") {
  auto a = strongly_prufer_and_ch(f2_f4());
  CHECK(a.ch_ring);
  CHECK(a.strongly_prufer);
  CHECK(strongly_prufer_and_ch(gf4()).strongly_prufer);
  auto z6 = make_cyclic_ring(6);
  CHECK(strongly_prufer_and_ch(z6).ch_ring);
  for (const auto& i : enumerate_ideals(z6))
    if (!i.is_whole()) CHECK_FALSE(annihilator(i).is_zero());
}

TEST_CASE("nagata report") {
  CHECK(nagata_prufer_report(f2_f4()).find("A(X) is Prüfer") != std::string::npos);
  CHECK(nagata_prufer_report(gf4()).find("A(X) is Prüfer") != std::string::npos);
  const auto z4 = nagata_prufer_report(make_cyclic_ring(4));
  CHECK(z4.find("1 dense ideal(s)") != std::string::npos);
  CHECK(z4.find("A(X) is Prüfer") != std::string::npos);
}

TEST_CASE("classification reports") {
  auto r = classify_ring(triv_self(4));
  CHECK(r.prufer);
  CHECK_FALSE(r.gaussian);
  CHECK_FALSE(r.arithmetical);
  CHECK_FALSE(r.wdim_le_one);
  CHECK(r.witnesses.contains("gaussian"));
  CHECK(r.witnesses.contains("gaussian_polynomials"));

  auto s = classify_ring(f2_f4());
  CHECK(s.gaussian);
  CHECK_FALSE(s.arithmetical);

  auto k = classify_ring(gf4());
  for (const auto& f : flag_names())
    if (f != "wdim_infinite_certified") CHECK(flag_value(k, f));

  auto z1 = classify_ring(make_cyclic_ring(1));
  for (const auto& f : flag_names())
    if (f != "wdim_infinite_certified") CHECK(flag_value(z1, f));

  const auto j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["flags"]["gaussian"] == false);
  CHECK(j["flags"].contains("total_quotient_ring"));
  CHECK_FALSE(to_json(r, false).contains("timings_ms"));
  CHECK(render_text(r).find("gaussian: false") != std::string::npos);

  PropertyReport bad = k;
  bad.gaussian = false;
  CHECK(chain_violation(bad).has_value());
  CHECK_THROWS_AS(flag_value(k, "noetherian"), InvalidArgument);
}

TEST_CASE("csv quoting") {
  CHECK(csv_line({"a", "b,c", "d\"e"}) == "a,\"b,c\",\"d\"\"e\"");
}
