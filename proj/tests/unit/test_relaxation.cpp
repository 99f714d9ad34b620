#include <doctest.h>

#include <algorithm>

#include "kgqr/eval.hpp"
#include "kgqr/relaxation.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace kgqr;
using namespace kgqr::testsup;

namespace {

const Term kType = Term::iri(std::string(vocab::rdf_type));

}  // namespace

TEST_CASE("superclass relaxation moves one asserted edge up") {
    Graph g = lubm_graph();
    const TriplePattern tp{Variable{"x"}, kType, ub("Lecturer")};
    auto rewrites = superclass_relax(tp, g.schema());
    REQUIRE(rewrites.has_value());
    REQUIRE(rewrites->size() == 1);
    CHECK((*rewrites)[0].pattern ==
          TriplePattern{Variable{"x"}, kType, ub("Faculty")});
    CHECK((*rewrites)[0].step.kind == RewriteKind::Superclass);

    // a class with no superclass yields an empty list, not a signal
    const TriplePattern top{Variable{"x"}, kType, ub("Person")};
    auto none = superclass_relax(top, g.schema());
    REQUIRE(none.has_value());
    CHECK(none->empty());

    // non-type patterns are not applicable
    CHECK_FALSE(superclass_relax(
                    TriplePattern{Variable{"x"}, ub("worksFor"), ub("Faculty")},
                    g.schema())
                    .has_value());
    CHECK_FALSE(superclass_relax(
                    TriplePattern{Variable{"x"}, kType, Variable{"c"}},
                    g.schema())
                    .has_value());
}

TEST_CASE("superclass relaxation reaches Work from Film") {
    Graph g = ffc_graph();
    const TriplePattern tp{Variable{"movie"}, kType, dbo("Film")};
    auto rewrites = superclass_relax(tp, g.schema());
    REQUIRE(rewrites.has_value());
    REQUIRE(rewrites->size() == 1);
    CHECK(as_term((*rewrites)[0].pattern.object) == dbo("Work"));
}

TEST_CASE("superproperty relaxation follows asserted property edges") {
    Graph g = lubm_graph();
    const TriplePattern tp{Variable{"s"}, ub("headOf"), Variable{"o"}};
    auto rewrites = superproperty_relax(tp, g.schema());
    REQUIRE(rewrites.has_value());
    REQUIRE(rewrites->size() == 1);
    CHECK(as_term((*rewrites)[0].pattern.predicate) == ub("worksFor"));

    auto none = superproperty_relax(
        TriplePattern{Variable{"s"}, ub("advisor"), Variable{"o"}},
        g.schema());
    REQUIRE(none.has_value());
    CHECK(none->empty());

    CHECK_FALSE(superproperty_relax(
                    TriplePattern{Variable{"s"}, Variable{"p"}, Variable{"o"}},
                    g.schema())
                    .has_value());
}

TEST_CASE("literal relaxation swaps the literal for a fresh variable") {
    BGPQuery q;
    q.head = {"x"};
    q.body = {TriplePattern{Variable{"x"}, ub("researchInterest"),
                            Term::literal("Research2")}};
    FreshVars fresh(q);
    auto r = literal_relax(q.body[0], fresh);
    REQUIRE(r.has_value());
    CHECK(r->pattern == TriplePattern{Variable{"x"}, ub("researchInterest"),
                                      Variable{"_rlx0"}});

    FreshVars fresh2(q);
    CHECK_FALSE(literal_relax(TriplePattern{Variable{"x"}, ub("p"),
                                            Variable{"o"}},
                              fresh2)
                    .has_value());
    CHECK_FALSE(literal_relax(TriplePattern{Variable{"x"}, ub("p"), ub("o")},
                              fresh2)
                    .has_value());
}

TEST_CASE("simple relaxation frees any constant position") {
    BGPQuery q = director_query();
    FreshVars fresh(q);
    auto obj = simple_relax(q.body[0], Position::Object, fresh);
    REQUIRE(obj.has_value());
    CHECK(obj->pattern == TriplePattern{Variable{"s"}, kg("director"),
                                        Variable{"_rlx0"}});

    auto pred = simple_relax(obj->pattern, Position::Predicate, fresh);
    REQUIRE(pred.has_value());
    CHECK(pred->pattern == TriplePattern{Variable{"s"}, Variable{"_rlx1"},
                                         Variable{"_rlx0"}});

    auto subj = simple_relax(TriplePattern{kg("e"), kg("p"), kg("o")},
                             Position::Subject, fresh);
    REQUIRE(subj.has_value());
    CHECK(is_var(subj->pattern.subject));

    CHECK_FALSE(
        simple_relax(q.body[0], Position::Subject, fresh).has_value());
}

TEST_CASE("fresh variables never collide with query variables") {
    BGPQuery q;
    q.head = {"x"};
    q.body = {TriplePattern{Variable{"x"}, kg("p"), Variable{"_rlx0"}}};
    FreshVars fresh(q);
    const std::string name = fresh.next();
    CHECK(name != "_rlx0");
    CHECK(name == "_rlx1");
}

TEST_CASE("variable typing assigns the most specific observed class") {
    Graph g = ffc_graph();
    const TriplePattern tp{Variable{"movie"}, dbo("director"),
                           dbr("Francis_Ford_Coppola")};
    const auto typing = variable_typing(tp, g);
    // both movies are typed Film and (inferred) Work; Film is more specific
    REQUIRE(typing.size() == 1);
    CHECK(typing[0] == TriplePattern{Variable{"movie"}, kType, dbo("Film")});
}

TEST_CASE("variable typing is empty without matches or types") {
    Graph g = ffc_graph();
    CHECK(variable_typing(TriplePattern{Variable{"x"}, dbo("director"),
                                        dbr("Nobody")},
                          g)
              .empty());
    // matching subjects but none typed
    Graph untyped = build_graph({{kg("a"), kg("p"), kg("b")}});
    CHECK(variable_typing(TriplePattern{Variable{"x"}, kg("p"), kg("b")},
                          compute_closure(untyped))
              .empty());
    // wrong shape
    CHECK(variable_typing(TriplePattern{Variable{"x"}, Variable{"p"},
                                        dbr("Detroit")},
                          g)
              .empty());
}

TEST_CASE("variable typing falls back to declared domains") {
    const Term domain = Term::iri(std::string(vocab::rdfs_domain));
    Graph g = compute_closure(build_graph({
        {kg("director"), domain, kg("Film")},
        {kg("other"), kg("director"), kg("Someone")},
    }));
    // no subject matches <?x, director, Nobody>: use the domain declaration
    const auto typing = variable_typing(
        TriplePattern{Variable{"x"}, kg("director"), kg("Nobody")}, g);
    REQUIRE(typing.size() == 1);
    CHECK(as_term(typing[0].object) == kg("Film"));

    const auto declared = variable_typing(
        TriplePattern{Variable{"x"}, kg("director"), kg("Someone")}, g,
        TypingSource::DomainDeclarations);
    REQUIRE(declared.size() == 1);
    CHECK(as_term(declared[0].object) == kg("Film"));
}

TEST_CASE("typed queries keep exactly the original answers") {
    Graph g = ffc_graph();
    BGPQuery q;
    q.head = {"movie"};
    q.distinct = true;
    q.body = {TriplePattern{Variable{"movie"}, dbo("director"),
                            dbr("Francis_Ford_Coppola")}};

    const auto typing = variable_typing(q.body[0], g);
    BGPQuery typed = q;
    typed.body.insert(typed.body.begin(), typing.begin(), typing.end());

    CHECK(evaluate(typed, g).row_set() == evaluate(q, g).row_set());
}

TEST_CASE("single relaxation steps only widen the answers") {
    int checked = 0;
    for (std::uint64_t seed = 600; seed < 640; ++seed) {
        Rng rng(seed);
        GraphGenOptions opt;
        opt.max_triples = 50;
        const auto triples = random_graph(rng, opt);
        Graph g = compute_closure(build_graph(triples));
        const BGPQuery q = random_query(rng, triples);
        const auto original = evaluate(q, g).row_set();

        auto check_superset = [&](const BGPQuery& relaxed) {
            const auto rows = evaluate(relaxed, g).row_set();
            CHECK(std::includes(rows.begin(), rows.end(), original.begin(),
                                original.end()));
            ++checked;
        };

        for (std::size_t i = 0; i < q.body.size(); ++i) {
            const TriplePattern& tp = q.body[i];
            if (auto rs = superclass_relax(tp, g.schema())) {
                for (const PatternRewrite& r : *rs) {
                    BGPQuery q2 = q;
                    q2.body[i] = r.pattern;
                    check_superset(q2);
                }
            }
            if (auto rs = superproperty_relax(tp, g.schema())) {
                for (const PatternRewrite& r : *rs) {
                    BGPQuery q2 = q;
                    q2.body[i] = r.pattern;
                    check_superset(q2);
                }
            }
            FreshVars fresh(q);
            if (auto r = literal_relax(tp, fresh)) {
                BGPQuery q2 = q;
                q2.body[i] = r->pattern;
                check_superset(q2);
            }
            for (Position pos :
                 {Position::Subject, Position::Predicate, Position::Object}) {
                FreshVars fv(q);
                if (auto r = simple_relax(tp, pos, fv)) {
                    BGPQuery q2 = q;
                    q2.body[i] = r->pattern;
                    check_superset(q2);
                }
            }
        }
    }
    CHECK(checked > 50);  // the sweep must actually exercise rewrites
}
