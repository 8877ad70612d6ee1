#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "excseq/cluster.hpp"
#include "excseq/errors.hpp"

using namespace excseq;

TEST_SUITE_BEGIN("cluster-bijection");

TEST_CASE("compatibility rules") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    int s1 = a2.simple_of(1), s2 = a2.simple_of(2);
    CHECK_FALSE(compatible(a2, {s1, 0}, {s2, 0}, 1)); // ext(S1,S2) = 1
    CHECK(compatible(a2, {s1, 0}, {s1, 0}, 1));       // rigidity
    CHECK(compatible(a2, {s1, 0}, {s2, 1}, 1));
    CHECK_FALSE(compatible(a2, {s2, 0}, {s1, 1}, 1));

    Catalog a3 = Catalog::build(parse_quiver("A3:1>2<3"));
    int p3 = a3.projective_of(3), i2 = a3.injective_of(2), i3 = a3.injective_of(3);
    CHECK_FALSE(compatible(a3, {p3, 2}, {i2, 0}, 2)); // 3 lies in supp I2
    CHECK_FALSE(compatible(a3, {p3, 2}, {i3, 0}, 2)); // 3 lies in supp I3
    CHECK(compatible(a3, {a3.projective_of(1), 2}, {i3, 0}, 2));

    // The level-m rule is the support test: P_i[m] vs Y[k], k < m.
    for (int m : {1, 2})
        for (int v = 1; v <= 3; ++v)
            for (int y = 0; y < a3.size(); ++y)
                for (int k = 0; k < m; ++k) {
                    bool support_rule = (a3.support(y) & (1u << (v - 1))) == 0;
                    CHECK(compatible(a3, {a3.projective_of(v), m}, {y, k}, m) == support_rule);
                }
    // Shifted projectives are pairwise compatible.
    for (int v = 1; v <= 3; ++v)
        for (int w = 1; w <= 3; ++w)
            CHECK(compatible(a3, {a3.projective_of(v), 2}, {a3.projective_of(w), 2}, 2));
}

TEST_CASE("fundamental domain") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    CHECK(fundamental_domain(a2, a2.all_mask(), 1).size() == 5);  // |Phi+| + n
    CHECK(fundamental_domain(a2, a2.all_mask(), 2).size() == 8);  // m|Phi+| + n
    Catalog a3 = Catalog::build(parse_quiver("A3"));
    CHECK(fundamental_domain(a3, a3.all_mask(), 1).size() == 9);
    CHECK(enumerate_tuples(a3, 1, 1).size() == 9);
}

TEST_CASE("key_sigma examples") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    int s1 = a2.simple_of(1), s2 = a2.simple_of(2), p1 = a2.projective_of(1);
    LeveledObject out = key_sigma(a2, a2.all_mask(), {s2, 0}, {s1, 0}, 1, SigmaDirection::forward);
    CHECK(out == LeveledObject{p1, 0});
    // (1,0) - (1,1) = -(0,1) = -dim T with equal levels.
    CHECK(key_sigma(a2, a2.all_mask(), {s2, 0}, out, 1, SigmaDirection::inverse) ==
          LeveledObject{s1, 0});
    // S1[1] is incompatible with S2[0] (ext(S1,S2) = 1), so it mutates too,
    // staying at level 1.
    CHECK(key_sigma(a2, a2.all_mask(), {s2, 0}, {s1, 1}, 1, SigmaDirection::forward) ==
          LeveledObject{p1, 1});
    // Compatible input is fixed: S2 is ext-orthogonal to P1.
    CHECK(key_sigma(a2, a2.all_mask(), {p1, 0}, {s2, 0}, 1, SigmaDirection::forward) ==
          LeveledObject{s2, 0});
}

TEST_CASE("key_sigma is a bijection with the stated image") {
    for (const char* s : {"A2:1>2", "A3:1>2<3"}) {
        Catalog c = Catalog::build(parse_quiver(s));
        for (int m : {1, 2}) {
            for (const LeveledObject& t : fundamental_domain(c, c.all_mask(), m)) {
                std::uint64_t perp = c.right_perp_mask(t.module, c.all_mask());
                std::vector<LeveledObject> domain = fundamental_domain(c, perp, m);
                std::set<std::pair<int, int>> images;
                for (const LeveledObject& x : domain) {
                    LeveledObject y = key_sigma(c, c.all_mask(), t, x, m, SigmaDirection::forward);
                    CHECK(compatible(c, y, t, m));
                    CHECK(y != t);
                    images.insert({y.module, y.level});
                    CHECK(key_sigma(c, c.all_mask(), t, y, m, SigmaDirection::inverse) == x);
                }
                // Image = all domain objects compatible with T, minus T itself.
                std::size_t compatible_count = 0;
                for (const LeveledObject& z : fundamental_domain(c, c.all_mask(), m))
                    if (z != t && compatible(c, z, t, m)) ++compatible_count;
                CHECK(images.size() == domain.size());
                CHECK(images.size() == compatible_count);
            }
        }
    }
}

TEST_CASE("level drops only at projectives of the perpendicular category") {
    for (const char* s : {"A2:1>2", "A3", "A3:1>2<3"}) {
        Catalog c = Catalog::build(parse_quiver(s));
        for (int m : {1, 2}) {
            for (const LeveledObject& t : fundamental_domain(c, c.all_mask(), m)) {
                std::uint64_t perp = c.right_perp_mask(t.module, c.all_mask());
                for (const LeveledObject& x : fundamental_domain(c, perp, m)) {
                    LeveledObject y = key_sigma(c, c.all_mask(), t, x, m, SigmaDirection::forward);
                    if (y.level == x.level - 1) CHECK(c.projective_in(x.module, perp));
                    if (c.projective(y.module)) {
                        CHECK(y.level == x.level);
                        CHECK(c.projective_in(x.module, perp));
                    }
                }
            }
        }
    }
}

TEST_CASE("worked correspondences on 1>2<3 at m=2") {
    Catalog c = Catalog::build(parse_quiver("A3:1>2<3"));
    int p1 = c.projective_of(1), p2 = c.projective_of(2), p3 = c.projective_of(3);
    int i1 = c.injective_of(1), i2 = c.injective_of(2), i3 = c.injective_of(3);
    ExcSequence base = make_sequence(c, {p3, i2, i3});

    MExcSequence all_zero{2, base, {0, 0, 0}};
    CompatibleTuple t1 = theta_inverse(c, all_zero);
    CHECK(t1.entries == std::vector<LeveledObject>{{p3, 0}, {i2, 0}, {i3, 0}});
    CHECK(theta(c, t1) == all_zero);

    MExcSequence shifted{2, base, {2, 0, 0}};
    CompatibleTuple t2 = theta_inverse(c, shifted);
    CHECK(t2.entries == std::vector<LeveledObject>{{i1, 1}, {i2, 0}, {i3, 0}});
    CHECK(theta(c, t2) == shifted);

    MExcSequence mixed{2, base, {1, 1, 0}};
    CompatibleTuple t3 = theta_inverse(c, mixed);
    CHECK(t3.entries == std::vector<LeveledObject>{{p2, 1}, {p1, 1}, {i3, 0}});
    CHECK(theta(c, t3) == mixed);

    // Classification side facts: I2 is rPI, P3 relatively projective only.
    std::vector<TermClass> cls = classify(c, base);
    CHECK(cls[1].root());
    CHECK(cls[0] == TermClass{true, false});

    // Signedness matches positivity of the image.
    CHECK(is_projectively_signed(c, shifted));
    CHECK(is_positive(t2));
    CHECK(is_projectively_signed(c, all_zero)); // trivially: no level-2 terms
}

TEST_CASE("theta base case") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    for (const LeveledObject& obj : fundamental_domain(a2, a2.all_mask(), 1)) {
        CompatibleTuple t{1, {obj}};
        MExcSequence ms = theta(a2, t);
        CHECK(ms.seq.terms == std::vector<int>{obj.module});
        CHECK(ms.levels == std::vector<int>{obj.level});
        CHECK(theta_inverse(a2, ms) == t);
    }
}

TEST_CASE("round trips and conditions, exhaustive") {
    struct Case {
        const char* quiver;
        int m;
    };
    for (const Case& cse : {Case{"A2:1>2", 1}, Case{"A2:1>2", 2}, Case{"A3:1>2<3", 1},
                            Case{"A3:1>2<3", 2}, Case{"A3", 1}, Case{"D4:sym-sink", 1}}) {
        Catalog c = Catalog::build(parse_quiver(cse.quiver));
        for (int t = 1; t <= c.quiver().n(); ++t) {
            std::vector<CompatibleTuple> tuples = enumerate_tuples(c, cse.m, t);
            std::set<std::vector<std::pair<int, int>>> seen;
            for (const CompatibleTuple& tup : tuples) {
                // theta itself asserts the linear/level conditions, the
                // projectivity properties and the raw round trip.
                MExcSequence ms = theta(c, tup);
                CHECK(theta_inverse(c, ms) == tup);
                std::vector<std::pair<int, int>> flat;
                for (std::size_t i = 0; i < ms.seq.terms.size(); ++i)
                    flat.emplace_back(ms.seq.terms[i], ms.levels[i]);
                seen.insert(flat);
            }
            CHECK(seen.size() == tuples.size());
            CHECK(enumerate_m_exc(c, cse.m, t).size() == tuples.size());
        }
    }
}

TEST_CASE("positive tuples correspond to projectively signed sequences") {
    struct Case {
        const char* quiver;
        int m;
    };
    for (const Case& cse : {Case{"A2:1>2", 1}, Case{"A2:1>2", 2}, Case{"A3:1>2<3", 2},
                            Case{"A3", 1}, Case{"D4:sym-source", 1}}) {
        Catalog c = Catalog::build(parse_quiver(cse.quiver));
        for (int t = 1; t <= c.quiver().n(); ++t)
            for (const CompatibleTuple& tup : enumerate_tuples(c, cse.m, t)) {
                MExcSequence ms = theta(c, tup);
                CHECK(is_positive(tup) == is_projectively_signed(c, ms));
            }
    }
}

TEST_CASE("signed sequence examples") {
    Catalog a3 = Catalog::build(parse_quiver("A3:1>2<3"));
    ExcSequence base = make_sequence(a3, {a3.projective_of(3), a3.injective_of(2), a3.injective_of(3)});
    // I2 is relatively injective, so shifting it to level 1 at m=1 is not
    // projectively signed (though still a valid signed sequence).
    MExcSequence ms{1, base, {0, 1, 0}};
    require_m_exc(a3, ms);
    CHECK_FALSE(is_projectively_signed(a3, ms));
    // Level 1 on I3 at m=1 is malformed: I3 is not relatively projective.
    CHECK_THROWS_AS(require_m_exc(a3, MExcSequence{1, base, {0, 0, 1}}), ValidationError);
}

TEST_CASE("tuple validation") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    int s1 = a2.simple_of(1), s2 = a2.simple_of(2);
    CHECK_THROWS_AS(require_tuple(a2, CompatibleTuple{1, {{s1, 0}, {s2, 0}}}), DomainError);
    CHECK_THROWS_AS(require_tuple(a2, CompatibleTuple{1, {{s1, 0}, {s1, 0}}}), DomainError);
    CHECK_THROWS_AS(require_tuple(a2, CompatibleTuple{1, {{s1, 1}}}), DomainError); // S1 not projective
    CHECK_THROWS_AS(theta(a2, CompatibleTuple{1, {{s1, 0}, {s2, 0}}}), DomainError);
}

TEST_CASE("ordered tuple counts match signed sequence counts") {
    Catalog a2 = Catalog::build(parse_quiver("A2:1>2"));
    CHECK(enumerate_tuples(a2, 1, 2).size() == enumerate_m_exc(a2, 1, 2).size());
    CHECK(enumerate_tuples(a2, 1, 2).size() == 10);

    // No compatible set can exceed n elements.
    for (int m : {1, 2}) {
        std::vector<LeveledObject> domain = fundamental_domain(a2, a2.all_mask(), m);
        for (std::size_t i = 0; i < domain.size(); ++i)
            for (std::size_t j = i + 1; j < domain.size(); ++j)
                for (std::size_t k = j + 1; k < domain.size(); ++k) {
                    bool triple = compatible(a2, domain[i], domain[j], m) &&
                                  compatible(a2, domain[i], domain[k], m) &&
                                  compatible(a2, domain[j], domain[k], m);
                    CHECK_FALSE(triple);
                }
    }
}

TEST_SUITE_END();
