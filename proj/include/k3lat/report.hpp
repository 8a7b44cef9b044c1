#pragma once

#include <k3lat/families.hpp>
#include <k3lat/fibration.hpp>
#include <k3lat/hodge.hpp>
#include <k3lat/json_io.hpp>
#include <k3lat/mukai.hpp>

#include <functional>
#include <string>
#include <vector>

namespace k3lat {

struct ReportEntry {
    std::string claim_id;
    std::string description;
    json expected;
    json computed;
    bool pass = false;
};

inline ReportEntry make_entry(std::string id, std::string description, json expected,
                              json computed) {
    bool pass = expected == computed;
    return ReportEntry{std::move(id), std::move(description), std::move(expected),
                       std::move(computed), pass};
}

// The full machine-checked claim suite. Every entry recomputes a published
// numeric identity from scratch; pass means exact equality.
inline std::vector<ReportEntry> claim_suite() {
    std::vector<ReportEntry> out;
    auto add = [&](std::string id, std::string desc, json expected, json computed) {
        out.push_back(make_entry(std::move(id), std::move(desc), std::move(expected),
                                 std::move(computed)));
    };

    // -- lattice constants -----------------------------------------------
    add("u-gram", "hyperbolic plane intersection form", json::array({{0, 1}, {1, 0}}),
        intmat_to_json(hyperbolic_u().gram));
    {
        Lattice k3 = k3_lattice();
        auto [p, q] = signature(k3);
        add("k3-lattice",
            "K3 lattice: rank 22, unimodular, even, signature (3,19)",
            json{{"rank", 22}, {"disc", 1}, {"even", true}, {"signature", {3, 19}}},
            json{{"rank", k3.rank()},
                 {"disc", int_to_json(abs_int(discriminant(k3)))},
                 {"even", k3.is_even()},
                 {"signature", {p, q}}});
    }
    {
        FamilySpec ma = builtin("M_alpha");
        add("pic-m-alpha", "Pic of the nodal-sextic resolution: diag(2,-2), group (Z/2)^2",
            json{{"gram", {{2, 0}, {0, -2}}}, {"disc_group", {2, 2}}},
            json{{"gram", intmat_to_json(ma.ns.gram)},
                 {"disc_group", intvec_to_json(discriminant_group(ma.ns))}});
    }
    {
        FamilySpec mb = builtin("M_beta");
        add("pic-m-beta", "Pic of the (2,3) surface: disc -9, group Z/9",
            json{{"disc", -9}, {"disc_group", {9}}},
            json{{"disc", int_to_json(discriminant(mb.ns))},
                 {"disc_group", intvec_to_json(discriminant_group(mb.ns))}});
    }

    // -- transcendental-lattice inclusions -------------------------------
    {
        IndexEmbeddingReport rep = reproduce_index_embeddings();
        for (const auto& c : rep.chains)
            add("index-" + c.name, "inclusion index of the chain " + c.name,
                json{{"index", int_to_json(c.expected_index)}},
                json{{"index", c.index_by_discriminants == c.index_by_basis
                                   ? int_to_json(c.index_by_basis)
                                   : json("mismatch")}});
        add("complement-vector", "generator of the hyperplane complement in the (D,F) basis",
            json::array({3, -5}), intvec_to_json(rep.complement_vector));
        add("r-norm", "self-intersection of r = 3H - 8F", json(-72), int_to_json(rep.r_norm));
    }

    // -- rational isometry extension -------------------------------------
    add("coefficient-1-12", "rank-1 extension coefficient for norms (-2, -72)",
        json("1/12"), rat_to_json(rank1_extension_coefficient(-2, -72)));
    add("coefficient-1-4", "rank-1 extension coefficient for norms (2, 8)", json("1/4"),
        rat_to_json(rank1_extension_coefficient(2, 8)));
    {
        RationalIsometry zero = RationalIsometry::identity(Lattice(IntMat(0, 0)));
        RationalIsometry pol = extend_isometry(zero, 2, 8);     // D -> (1/2) H
        RationalIsometry tr = extend_isometry(zero, -2, -72);   // e -> (1/6) r
        RationalIsometry z = block_sum(pol, tr);
        add("assembled-isometry", "block isometry diag(1/2, 1/6) preserves diag(2,-2) -> diag(8,-72)",
            json(true), json(is_isometry(z.matrix, z.source, z.target)));
    }

    // -- genus-one fibration indices --------------------------------------
    {
        FamilySpec ma = builtin("M_alpha"), mb = builtin("M_beta");
        add("fibration-index-m-alpha", "fibration index of the nodal-sextic resolution", json(2),
            int_to_json(fibration_index({ma.ns, *ma.fiber})));
        add("fibration-index-m-beta", "fibration index of the (2,3) surface", json(3),
            int_to_json(fibration_index({mb.ns, *mb.fiber})));
        Lattice section(IntMat{{Int(-2), Int(1)}, {Int(1), Int(0)}});
        add("fibration-index-section", "elliptic surface with a section has index 1", json(1),
            int_to_json(fibration_index({section, {Int(0), Int(1)}})));
    }

    // -- Weierstrass sample ------------------------------------------------
    {
        BinForm g2(8);
        g2.c[0] = 1;
        g2.c[8] = 1;  // t^8 + s^8
        BinForm g3(12);
        g3.c[12] = 1;  // s^12
        WeierstrassModel w{g2, g3};
        add("weierstrass-sample", "generic model: valid, 24 nodal fibers, j-degree 24",
            json{{"valid", true}, {"nodal_count", 24}, {"j_degree", 24}},
            json{{"valid", is_valid(w)},
                 {"nodal_count", int_to_json(nodal_fiber_count(w))},
                 {"j_degree", int_to_json(j_degree(w))}});
        BinForm h2(8), h3(12);
        h2.c[4] = 1;  // t^4 s^4
        h3.c[6] = 1;  // t^6 s^6
        add("weierstrass-degenerate", "model with a multiplicity-(4,6) point is invalid",
            json(false), json(is_valid(WeierstrassModel{h2, h3})));
    }

    // -- relative Jacobian kernels ----------------------------------------
    {
        Lattice tj(IntMat{{Int(2), Int(0)}, {Int(0), Int(-2)}});
        auto [k2, i2] = jacobian_kernel(tj, Character(tj, 2, {Int(1), Int(0)}));
        auto [k3e, i3] = jacobian_kernel(tj, Character(tj, 3, {Int(1), Int(1)}));
        add("jacobian-kernel-orders", "kernel indices for order-2 and order-3 classes",
            json{{"n2", 2}, {"n3", 3}}, json{{"n2", int_to_json(i2)}, {"n3", int_to_json(i3)}});
        add("brauer-count", "number of 2-torsion classes on a rank-21 transcendental lattice",
            int_to_json(Int(1) << 21),
            int_to_json(brauer_element_count(Lattice(IntMat::identity(21)), 2)));
    }

    // -- Mukai arithmetic --------------------------------------------------
    {
        NSContext y{rank1(8)};
        MukaiVector v{2, {Int(1)}, 2};
        add("mukai-isotropic", "the vector (2, H, 2) on a degree-8 surface is isotropic: 8 - 8 = 0",
            json(0), int_to_json(mukai_pairing(v, v, y)));
        add("mukai-primitive", "(2, H, 2) is primitive", json(true), json(is_primitive(v)));
        add("mukai-from-chern", "Chern data (2, H, 4) gives the vector (2, H, 2)",
            mukai_to_json(v), mukai_to_json(from_chern(2, {Int(1)}, 4, y)));
        add("fineness-generic", "fineness index 2 for the generic degree-8 surface", json(2),
            int_to_json(fineness_index(v, y)));

        NSContext line{Lattice(IntMat{{Int(8), Int(1)}, {Int(1), Int(-2)}})};
        MukaiVector vl{2, {Int(1), Int(0)}, 2};
        MukaiVector u{0, {Int(0), Int(1)}, 0};
        add("fineness-line", "a line makes the moduli space fine: <u,v> = 1, n = 1",
            json{{"uv", 1}, {"n", 1}},
            json{{"uv", int_to_json(mukai_pairing(u, vl, line))},
                 {"n", int_to_json(fineness_index(vl, line))}});

        FamilySpec mb = builtin("M_beta");
        NSContext beta{mb.ns};
        MukaiVector vb{2, {Int(1), Int(1)}, 2};  // c1 = H = D + F
        MukaiVector ub{0, {Int(0), Int(1)}, 0};  // (0, F, 0)
        add("fineness-beta", "on the (2,3) surface <(0,F,0), v> = 3, odd, so n = 1",
            json{{"uv", 3}, {"n", 1}},
            json{{"uv", int_to_json(mukai_pairing(ub, vb, beta))},
                 {"n", int_to_json(fineness_index(vb, beta))}});
    }

    // -- splitting types and Schubert pairings -----------------------------
    {
        auto types = p1_splitting_types(2, -2, 0);
        json got = json::array();
        for (const auto& t : types) got.push_back(intvec_to_json(t));
        add("splitting-type", "rank 2, degree -2, no sections: O(-1) + O(-1) only",
            json::array({{-1, -1}}), got);
        add("h0-conic", "h^0 of O(2) on P^1 is 3", json::array({{2}}),
            [&] {
                json a = json::array();
                for (const auto& t : p1_splitting_types(1, 2, 3)) a.push_back(intvec_to_json(t));
                return a;
            }());
        add("schubert-table", "middle-degree Poincare pairings on Gr(2,4)",
            json{{"pp", 1}, {"ph", 0}, {"hh", 1}},
            json{{"pp", int_to_json(schubert_pairing({2}, {2}))},
                 {"ph", int_to_json(schubert_pairing({2}, {1, 1}))},
                 {"hh", int_to_json(schubert_pairing({1, 1}, {1, 1}))}});
    }

    // -- Diophantine families ----------------------------------------------
    {
        Int l = solve_partner(1, 1);
        auto lam = correspondence_lambda(series_degree(Series::X3k, 1),
                                         series_degree(Series::X3k1, l));
        add("partner-degree", "partner parameter for the quartic family: l = 6, lambda = 12",
            json{{"l", 6}, {"lambda", 12}},
            json{{"l", int_to_json(l)}, {"lambda", lam ? int_to_json(*lam) : json(nullptr)}});
        add("no-x3k-x3k2-pairs", "no square degree products between the 6k-2 and 6m+2 series",
            json(0), json(enumerate_pairs(Series::X3k, Series::X3k2, 20, 20).size()));
        auto y_pairs = enumerate_pairs(Series::X3k, Series::Y4m5, 1, 9);
        bool found = false;
        for (const auto& p : y_pairs)
            if (p.lambda == 8) found = true;
        add("y-series-pair", "a quartic x index-2-series pair with lambda = 8 exists", json(true),
            json(found));
    }

    return out;
}

inline json report_to_json(const std::vector<ReportEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(json{{"claim_id", e.claim_id},
                           {"description", e.description},
                           {"expected", e.expected},
                           {"computed", e.computed},
                           {"pass", e.pass}});
    return arr;
}

} // namespace k3lat
