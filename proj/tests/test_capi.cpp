// Tests for the C interface. Everything here goes through the extern-C
// surface only — handles, status codes, and JSON strings — exactly as an
// external consumer (or the CLI) would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <ringlcp.h>

#include <string>

using nlohmann::ordered_json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { ringlcp_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

struct Ring {
    ringlcp_ring* h = nullptr;
    ~Ring() { ringlcp_ring_free(h); }
};

struct Code {
    ringlcp_code* h = nullptr;
    ~Code() { ringlcp_code_free(h); }
};

ringlcp_ring* preset(const char* text) {
    ringlcp_ring* r = nullptr;
    REQUIRE(ringlcp_ring_from_preset(text, &r) == RINGLCP_OK);
    REQUIRE(r != nullptr);
    return r;
}

ringlcp_code* code(const ringlcp_ring* ring, const std::string& spec) {
    ringlcp_code* c = nullptr;
    INFO("spec: ", spec, " err: ", ringlcp_last_error());
    REQUIRE(ringlcp_code_from_spec(ring, spec.c_str(), "code.json", &c) == RINGLCP_OK);
    REQUIRE(c != nullptr);
    return c;
}

std::string gens_json(const std::vector<std::vector<std::string>>& rows, int n) {
    ordered_json j;
    j["n"] = n;
    auto g = ordered_json::array();
    for (const auto& row : rows) {
        auto r = ordered_json::array();
        for (const auto& cell : row) r.push_back(cell);
        g.push_back(r);
    }
    j["generators"] = g;
    return j.dump();
}

}  // namespace

TEST_CASE("version and last-error basics") {
    CHECK(std::string(ringlcp_version()) == "0.1.0");
    Ring r{preset("field(5)")};
    CHECK(std::string(ringlcp_last_error()).empty());

    ringlcp_ring* bad = nullptr;
    CHECK(ringlcp_ring_from_preset("nope(2)", &bad) == RINGLCP_EINVAL);
    CHECK(bad == nullptr);
    CHECK(!std::string(ringlcp_last_error()).empty());

    // Null arguments are EINVAL, not crashes; _free accepts NULL.
    CHECK(ringlcp_ring_from_preset(nullptr, &bad) == RINGLCP_EINVAL);
    CHECK(ringlcp_ring_from_spec("{}", nullptr, nullptr) == RINGLCP_EINVAL);
    ringlcp_ring_free(nullptr);
    ringlcp_code_free(nullptr);
    ringlcp_string_free(nullptr);
}

TEST_CASE("ring info reports structure of the presets") {
    Ring ut2{preset("ut2(3)")};
    Str info;
    REQUIRE(ringlcp_ring_info_json(ut2.h, nullptr, &info.p) == RINGLCP_OK);
    auto j = ordered_json::parse(info.get());
    CHECK(j["name"] == "ut2(3)");
    CHECK(j["field"]["q"] == 3);
    CHECK(j["dim"] == 2);
    CHECK(j["size"] == "9");
    CHECK(j["commutative"] == true);
    CHECK(j["local"] == true);
    CHECK(j["jacobson"]["dim"] == 1);
    CHECK(j["jacobson"]["nilpotency_index"] == 2);
    CHECK(j["jacobson"]["basis"][0] == "u");
    CHECK(j["residue"]["map_available"] == true);
    CHECK(j["unit_count"] == 6);
    CHECK(j["frobenius_necessary"]["passed"] == true);

    Ring f5{preset("field(5)")};
    Str info5;
    REQUIRE(ringlcp_ring_info_json(f5.h, nullptr, &info5.p) == RINGLCP_OK);
    auto j5 = ordered_json::parse(info5.get());
    CHECK(j5["size"] == "5");
    CHECK(j5["jacobson"]["dim"] == 0);
    CHECK(j5["jacobson"]["nilpotency_index"] == 1);
    CHECK(j5["unit_count"] == 4);

    Ring bp{preset("blockpair(3)")};
    Str infobp;
    REQUIRE(ringlcp_ring_info_json(bp.h, nullptr, &infobp.p) == RINGLCP_OK);
    auto jbp = ordered_json::parse(infobp.get());
    CHECK(jbp["size"] == "81");
    CHECK(jbp["local"] == false);
    CHECK(jbp["residue"]["map_available"] == false);
    CHECK(jbp["residue"]["dim_residue"] == 2);

    // The unit scan respects the budget: cap below |R| suppresses the count.
    Str capped;
    REQUIRE(ringlcp_ring_info_json(bp.h, R"({"scan_cap": 10})", &capped.p) == RINGLCP_OK);
    CHECK(ordered_json::parse(capped.get())["unit_count"].is_null());
}

TEST_CASE("ring and code specs flow through with diagnostics") {
    Ring r;
    REQUIRE(ringlcp_ring_from_spec(R"js({"preset": "ut2(3)"})js", "ring.json", &r.h) ==
            RINGLCP_OK);

    // Malformed spec: diagnostic carries the filename hint.
    ringlcp_ring* bad = nullptr;
    CHECK(ringlcp_ring_from_spec(R"js({"preset": )js", "ring.json", &bad) ==
          RINGLCP_EINVAL);
    CHECK(std::string(ringlcp_last_error()).find("ring.json") != std::string::npos);

    Code c{code(r.h, gens_json({{"1", "0", "1"}}, 3))};
    int dist = 0;
    REQUIRE(ringlcp_min_distance(c.h, nullptr, &dist) == RINGLCP_OK);
    CHECK(dist == 2);

    // Declared-ring mismatch inside the code spec is rejected.
    ringlcp_code* badc = nullptr;
    std::string mism = R"js({"ring": {"preset": "field(3)"}, "n": 1, "generators": [["1"]]})js";
    CHECK(ringlcp_code_from_spec(r.h, mism.c_str(), nullptr, &badc) == RINGLCP_EINVAL);
    CHECK(std::string(ringlcp_last_error()).find("was supplied") != std::string::npos);

    // Zero code: min-distance is EINVAL.
    Code z{code(r.h, gens_json({}, 2))};
    CHECK(ringlcp_min_distance(z.h, nullptr, &dist) == RINGLCP_EINVAL);
}

TEST_CASE("check-lcp emits the full report and honors method subsets") {
    Ring r{preset("ut2(3)")};
    Code c{code(r.h, gens_json({{"1", "2", "0"}, {"0", "1", "2"}}, 3))};
    Code d{code(r.h, gens_json({{"1", "2", "1"}}, 3))};

    Str full;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, nullptr, nullptr, &full.p) == RINGLCP_OK);
    auto j = ordered_json::parse(full.get());
    CHECK(j["ring"] == "ut2(3)");
    CHECK(j["criteria"].size() == 6);
    CHECK(j["consistent"] == true);
    for (const auto& crit : j["criteria"]) CHECK(crit["verdict"] == "yes");
    REQUIRE(j["security"].is_object());
    CHECK(j["security"]["d_C"] == 2);
    CHECK(j["security"]["d_D_dual"] == 2);

    // "all" and the default are byte-identical.
    Str all;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "all", nullptr, &all.p) == RINGLCP_OK);
    CHECK(all.get() == full.get());

    // Subset: only the two selected criteria appear, in canonical order.
    Str sub;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "stack,definition", nullptr, &sub.p) ==
            RINGLCP_OK);
    auto js = ordered_json::parse(sub.get());
    REQUIRE(js["criteria"].size() == 2);
    CHECK(js["criteria"][0]["criterion"] == "definition");
    CHECK(js["criteria"][1]["criterion"] == "generator_stack");
    CHECK(js["consistent"] == true);
    CHECK(js["security"]["d_C"] == 2);

    // Without the definition criterion no security block is attached.
    Str pi_only;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "pi", nullptr, &pi_only.p) == RINGLCP_OK);
    auto jp = ordered_json::parse(pi_only.get());
    REQUIRE(jp["criteria"].size() == 1);
    CHECK(jp["criteria"][0]["criterion"] == "pi_reduction");
    CHECK(jp["criteria"][0]["verdict"] == "yes");
    CHECK(jp["security"].is_null());

    ringlcp_code* nullcode = nullptr;
    (void)nullcode;
    Str out;
    CHECK(ringlcp_check_lcp_json(c.h, d.h, "definition,bogus", nullptr, &out.p) ==
          RINGLCP_EINVAL);
    CHECK(std::string(ringlcp_last_error()).find("bogus") != std::string::npos);

    // Structural subset carries the slot breakdown.
    Str st;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "structural", nullptr, &st.p) == RINGLCP_OK);
    auto jst = ordered_json::parse(st.get());
    REQUIRE(jst["criteria"].size() == 1);
    CHECK(jst["criteria"][0]["criterion"] == "structural");
    CHECK(jst["criteria"][0]["slots"].size() == 5);
    CHECK(jst["criteria"][0]["disjoint"] == true);
    CHECK(jst["criteria"][0]["cardinality_ok"] == true);
}

TEST_CASE("codes built from distinct handles of the same ring interoperate") {
    Ring r1{preset("ut2(3)")};
    Ring r2{preset("ut2(3)")};
    Code c{code(r1.h, gens_json({{"1", "2", "0"}, {"0", "1", "2"}}, 3))};
    Code d{code(r2.h, gens_json({{"1", "2", "1"}}, 3))};

    Str rep;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "definition", nullptr, &rep.p) == RINGLCP_OK);
    CHECK(ordered_json::parse(rep.get())["criteria"][0]["verdict"] == "yes");

    // Genuinely different rings are rejected.
    Ring f3{preset("field(3)")};
    Code e{code(f3.h, gens_json({{"1", "1", "0"}}, 3))};
    Str out;
    CHECK(ringlcp_check_lcp_json(c.h, e.h, "definition", nullptr, &out.p) ==
          RINGLCP_EINVAL);
    CHECK(std::string(ringlcp_last_error()).find("different rings") != std::string::npos);
}

TEST_CASE("dual, security, idempotent, and equivalence reports") {
    Ring bp{preset("blockpair(3)")};
    Code c{code(bp.h, gens_json({{"e1"}}, 1))};
    Code d{code(bp.h, gens_json({{"e2"}}, 1))};

    Str dual;
    REQUIRE(ringlcp_dual_json(c.h, nullptr, &dual.p) == RINGLCP_OK);
    auto jd = ordered_json::parse(dual.get());
    CHECK(jd["n"] == 1);
    CHECK(jd["side"] == "left");
    CHECK(jd["dim"] == 2);
    CHECK(jd["cardinality"] == "9");
    CHECK(jd["generators"].size() == 2);
    CHECK(jd["min_distance"] == 1);

    Str sec;
    REQUIRE(ringlcp_security_json(c.h, d.h, nullptr, &sec.p) == RINGLCP_OK);
    auto jsec = ordered_json::parse(sec.get());
    CHECK(jsec["d_C"] == 1);
    CHECK(jsec["d_D_dual"] == 1);

    Str idem;
    REQUIRE(ringlcp_idempotent_json(c.h, d.h, nullptr, &idem.p) == RINGLCP_OK);
    auto ji = ordered_json::parse(idem.get());
    CHECK(ji["e"] == ordered_json::array({ordered_json::array({"e1"})}));
    CHECK(ji["E"] == ordered_json::array({ordered_json::array({"e1"})}));
    CHECK(ji["e_squared"] == true);

    // A non-complementary pair cannot produce a projection.
    Str none;
    CHECK(ringlcp_idempotent_json(c.h, c.h, nullptr, &none.p) == RINGLCP_EINVAL);

    Str eqv;
    REQUIRE(ringlcp_equivalence_json(c.h, c.h, nullptr, &eqv.p) == RINGLCP_OK);
    CHECK(ordered_json::parse(eqv.get())["kind"] == "set-equal");
}

TEST_CASE("dual generators round-trip into the equivalence search") {
    Ring r{preset("ut2(3)")};
    Code c{code(r.h, gens_json({{"1", "2", "0"}, {"0", "1", "2"}}, 3))};
    Code d{code(r.h, gens_json({{"1", "2", "1"}}, 3))};

    Str dual;
    REQUIRE(ringlcp_dual_json(c.h, nullptr, &dual.p) == RINGLCP_OK);
    auto jd = ordered_json::parse(dual.get());

    // Rebuild the dual as a code from its reported generators (the ring is
    // commutative, so the tuple set is side-independent).
    ordered_json spec;
    spec["n"] = jd["n"];
    spec["generators"] = jd["generators"];
    Code dualcode{code(r.h, spec.dump())};

    Str eqv;
    REQUIRE(ringlcp_equivalence_json(dualcode.h, d.h, nullptr, &eqv.p) == RINGLCP_OK);
    auto je = ordered_json::parse(eqv.get());
    CHECK(je["kind"] == "monomial");
    CHECK(je["permutation"] == ordered_json::array({0, 1, 2}));
    CHECK(je["scalars"] == ordered_json::array({"1", "2", "1"}));
}

TEST_CASE("duality pipeline over the C surface") {
    Ring r{preset("ut2(3)")};
    Code c{code(r.h, gens_json({{"1", "2", "0"}, {"0", "1", "2"}}, 3))};
    Code d{code(r.h, gens_json({{"1", "2", "1"}}, 3))};

    Str rep;
    REQUIRE(ringlcp_duality_json(c.h, d.h, nullptr, nullptr, &rep.p) == RINGLCP_OK);
    auto j = ordered_json::parse(rep.get());
    CHECK(j["supplied"] == false);
    CHECK(j["e_squared"] == true);
    CHECK(j["transpose_idempotent"] == true);
    CHECK(j["image_matches"] == true);
    CHECK(j["dual_formula_checked"] == true);
    CHECK(j["dual_formula_agrees"] == true);
    CHECK(j["c_dual_vs_d"]["kind"] == "monomial");
    CHECK(j["distances"]["d_C"] == 2);
    CHECK(j["distances"]["d_D"] == 3);
    CHECK(j["distances"]["d_C_dual"] == 3);
    CHECK(j["distances"]["d_D_dual"] == 2);

    // Supplied idempotent: accepted when square and idempotent.
    Str sup;
    const char* e_rows = R"js([["1","0","2"],["0","1","2"],["0","0","0"]])js";
    REQUIRE(ringlcp_duality_json(c.h, d.h, e_rows, nullptr, &sup.p) == RINGLCP_OK);
    auto js = ordered_json::parse(sup.get());
    CHECK(js["supplied"] == true);
    CHECK(js["e_squared"] == true);
    CHECK(js["dual_formula_agrees"] == true);

    // Malformed supplied matrices are rejected.
    Str bad;
    CHECK(ringlcp_duality_json(c.h, d.h, R"js([["1","0"]])js", nullptr, &bad.p) ==
          RINGLCP_EINVAL);
    CHECK(ringlcp_duality_json(c.h, d.h, "not json", nullptr, &bad.p) == RINGLCP_EINVAL);
}

TEST_CASE("reproduce surface: ids, filters, sweeps, determinism") {
    Str ids;
    REQUIRE(ringlcp_example_ids(&ids.p) == RINGLCP_OK);
    CHECK(ids.get() == "3.1,4.1,5.4,5.5");

    Str one;
    REQUIRE(ringlcp_reproduce_json("5.4", nullptr, nullptr, &one.p) == RINGLCP_OK);
    auto j = ordered_json::parse(one.get());
    REQUIRE(j["rows"].size() == 5);
    for (const auto& row : j["rows"]) CHECK(row["status"] == "confirmed");

    Str swept;
    REQUIRE(ringlcp_reproduce_json("5.5", "2", nullptr, &swept.p) == RINGLCP_OK);
    CHECK(ordered_json::parse(swept.get())["rows"].size() == 6);

    Str again;
    REQUIRE(ringlcp_reproduce_json("5.4", nullptr, nullptr, &again.p) == RINGLCP_OK);
    CHECK(one.get() == again.get());

    Str text;
    REQUIRE(ringlcp_reproduce_text("5.4", nullptr, nullptr, &text.p) == RINGLCP_OK);
    CHECK(text.get().find("example 5.4") != std::string::npos);

    Str bad;
    CHECK(ringlcp_reproduce_json("9.9", nullptr, nullptr, &bad.p) == RINGLCP_EINVAL);
    CHECK(ringlcp_reproduce_json("5.5", "x", nullptr, &bad.p) == RINGLCP_EINVAL);
}

TEST_CASE("budget specs are validated") {
    Ring r{preset("ut2(3)")};
    Code c{code(r.h, gens_json({{"1", "2", "0"}, {"0", "1", "2"}}, 3))};
    Code d{code(r.h, gens_json({{"1", "2", "1"}}, 3))};

    Str out;
    CHECK(ringlcp_check_lcp_json(c.h, d.h, nullptr, R"({"nope": 1})", &out.p) ==
          RINGLCP_EINVAL);
    CHECK(ringlcp_check_lcp_json(c.h, d.h, nullptr, "[1]", &out.p) == RINGLCP_EINVAL);
    CHECK(ringlcp_check_lcp_json(c.h, d.h, nullptr, R"({"scan_cap": -3})", &out.p) ==
          RINGLCP_EINVAL);
    CHECK(ringlcp_check_lcp_json(c.h, d.h, nullptr, R"({"timings": 3})", &out.p) ==
          RINGLCP_EINVAL);

    // timings budget adds timing fields.
    Str timed;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "definition", R"({"timings": true})",
                                   &timed.p) == RINGLCP_OK);
    CHECK(ordered_json::parse(timed.get())["criteria"][0].contains("timing_ms"));

    // A tiny scan cap turns exhaustive criteria into budget_exceeded verdicts
    // without breaking consistency.
    Str capped;
    REQUIRE(ringlcp_check_lcp_json(c.h, d.h, "structural", R"({"scan_cap": 2})",
                                   &capped.p) == RINGLCP_OK);
    auto jc = ordered_json::parse(capped.get());
    CHECK(jc["consistent"] == true);
}
