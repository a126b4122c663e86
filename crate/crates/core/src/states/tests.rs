use std::collections::HashSet;

use proptest::prelude::*;

use super::*;
use crate::corpus;
use crate::diagram::{diagram_from_text, Colour, TaitGraph};

fn tait(name: &str) -> TaitGraph {
    corpus::diagram(name).unwrap().tait()
}

/// Counts from an independent brute-force enumeration:
/// (name, all matchings, acyclic matchings, perfect acyclic matchings).
const GOLDEN: &[(&str, usize, usize, usize)] = &[
    ("3_1", 84, 64, 18),
    ("4_1", 332, 260, 45),
    ("5_1", 1123, 671, 50),
    ("5_2", 1236, 892, 84),
    ("6_1", 4388, 2856, 135),
    ("6_2", 4602, 3288, 165),
    ("6_3", 4830, 3730, 208),
];

#[test]
fn enumeration_matches_golden_counts() {
    for &(name, all, dmf, perfect) in GOLDEN {
        let t = tait(name);
        assert_eq!(count_matchings(&t, Filter::All), all, "{name} all");
        assert_eq!(count_matchings(&t, Filter::Dmf), dmf, "{name} dmf");
        assert_eq!(count_matchings(&t, Filter::PerfectDmf), perfect, "{name} perfect dmf");
    }
}

#[test]
fn enumeration_is_lexicographic_and_filters_agree_with_predicates() {
    for name in ["3_1", "4_1", "5_2"] {
        let t = tait(name);
        let all = enumerate_matchings(&t, Filter::All);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Matching::empty());
        let by_pred = |p: &dyn Fn(&Matching) -> bool| all.iter().filter(|m| p(m)).cloned().collect::<Vec<_>>();
        assert_eq!(enumerate_matchings(&t, Filter::MaximalPks), by_pred(&|m| m.is_perfect(&t)));
        assert_eq!(enumerate_matchings(&t, Filter::PerfectAdmissible), by_pred(&|m| m.is_perfect_admissible(&t)));
        assert_eq!(enumerate_matchings(&t, Filter::Dmf), by_pred(&|m| is_dmf(&t, m)));
        assert_eq!(enumerate_matchings(&t, Filter::MaximalMatching), by_pred(&|m| m.is_maximal_matching(&t)));
        let dmfs = enumerate_matchings(&t, Filter::Dmf);
        let maximal_dmf: Vec<Matching> = dmfs
            .iter()
            .filter(|m| {
                !dmfs.iter().any(|o| o.len() == m.len() + 1 && m.edges().iter().all(|e| o.contains(*e)))
            })
            .cloned()
            .collect();
        assert_eq!(enumerate_matchings(&t, Filter::MaximalDmf), maximal_dmf);
    }
}

#[test]
fn kauffman_state_counts() {
    // Three states on the trefoil and five on the figure-eight, for every
    // marked arc.
    for (name, expect) in [("trefoil", 3), ("figure-eight", 5), ("3_1", 3), ("4_1", 5)] {
        let d = corpus::diagram(name).unwrap();
        let t = d.tait();
        for a in 0..d.num_arcs() {
            let (black, white) = d.marked_arc_regions(a);
            let states = enumerate_matchings(&t, Filter::KauffmanStates { black, white });
            assert_eq!(states.len(), expect, "{name} arc {a}");
            for x in &states {
                assert!(is_dmf(&t, x));
                assert!(monochromatic_loops(&t, x).is_empty());
                assert_eq!(jordan_resolution(&t, x).num_components(), 1);
            }
        }
    }
}

#[test]
fn loop_criterion_agrees_with_poset_graph() {
    for (name, d) in corpus::knots_up_to(5) {
        let t = d.tait();
        let _ = for_each_matching(&t, Filter::All, |m| {
            let x = Matching::from_sorted(m.to_vec());
            assert_eq!(monochromatic_loops(&t, &x).is_empty(), !poset_graph_has_cycle(&t, &x), "{name} {x:?}");
            std::ops::ControlFlow::Continue(())
        });
    }
    let t = diagram_from_text(corpus::KINK).unwrap().tait();
    for x in enumerate_matchings(&t, Filter::All) {
        assert_eq!(monochromatic_loops(&t, &x).is_empty(), !poset_graph_has_cycle(&t, &x));
    }
}

#[test]
fn supported_loops_alternate_and_stay_in_one_colour() {
    let t = tait("4_1");
    for x in enumerate_matchings(&t, Filter::All) {
        for l in monochromatic_loops(&t, &x) {
            assert!(l.edges.len() >= 2 && l.edges.len() % 2 == 0);
            assert!(l.edges.iter().all(|&e| t.edge_colour(e) == l.colour));
            let matched = l.edges.iter().filter(|&&e| x.contains(e)).count();
            assert_eq!(2 * matched, l.edges.len());
            assert_eq!(l.edges[0], *l.edges.iter().min().unwrap());
        }
    }
}

#[test]
fn empty_matching_resolution_on_trefoil() {
    let t = tait("trefoil");
    let j = jordan_resolution(&t, &Matching::empty());
    assert_eq!(j.num_components(), 1);
    assert_eq!(j.double_points().len(), 3);
}

#[test]
fn jordan_parity_and_pseudoforests() {
    for (name, d) in corpus::knots_up_to(6) {
        let t = d.tait();
        let graphs = d.colour_graphs();
        for x in enumerate_matchings(&t, Filter::MaximalPks) {
            let j = jordan_resolution(&t, &x);
            assert!(j.double_points().is_empty());
            let odd = j.num_components() % 2 == 1;
            assert_eq!(x.is_admissible(&t), odd, "{name} {x:?}");
            if x.is_admissible(&t) {
                let h = InducedSubgraphs::of(&t, &x);
                for g in [&graphs.0, &graphs.1] {
                    let comps = h.components(g);
                    assert!(comps.iter().all(|c| c.is_tree() || c.is_unicyclic()));
                    assert_eq!(comps.iter().filter(|c| c.is_tree()).count(), 1);
                }
                assert_eq!(j.num_components() - 1, monochromatic_loops(&t, &x).len());
                assert_eq!(is_dmf(&t, &x), j.num_components() == 1);
            }
        }
    }
}

#[test]
fn admissible_dmf_iff_connected_resolution_for_partial_states() {
    for (name, d) in corpus::knots_up_to(5) {
        let t = d.tait();
        for x in enumerate_matchings(&t, Filter::All) {
            if x.is_admissible(&t) {
                assert_eq!(is_dmf(&t, &x), jordan_resolution(&t, &x).num_components() == 1, "{name} {x:?}");
            }
        }
    }
}

#[test]
fn acyclic_implies_admissible() {
    for (_, d) in corpus::knots_up_to(6) {
        let t = d.tait();
        for x in enumerate_matchings(&t, Filter::Dmf) {
            assert!(x.is_admissible(&t));
        }
    }
}

#[test]
fn critical_cells_of_perfect_dmfs() {
    let t = tait("trefoil");
    for x in enumerate_matchings(&t, Filter::PerfectDmf) {
        let cc = x.critical_cells(&t);
        assert_eq!((cc.black.len(), cc.crossings.len(), cc.white.len()), (1, 0, 1));
    }
}

#[test]
fn forest_round_trip() {
    for (name, d) in corpus::knots_up_to(5) {
        let t = d.tait();
        for x in enumerate_matchings(&t, Filter::Dmf) {
            let f = induced_forests(&t, &x).unwrap();
            assert_eq!(forests_to_matching(&t, &f).unwrap(), x, "{name}");
            if x.is_perfect(&t) {
                assert_eq!((f.black_roots.len(), f.white_roots.len()), (1, 1));
                assert_eq!(f.black.len() + f.white.len(), t.num_crossings());
            }
        }
    }
    let t = tait("trefoil");
    let empty = induced_forests(&t, &Matching::empty()).unwrap();
    assert!(empty.black.is_empty() && empty.white.is_empty());
    assert_eq!(empty.black_roots.len() + empty.white_roots.len(), 5);
    assert_eq!(forests_to_matching(&t, &empty).unwrap(), Matching::empty());
}

#[test]
fn induced_forests_errors() {
    let t = tait("4_1");
    let bad = enumerate_matchings(&t, Filter::All).into_iter().find(|x| !is_dmf(&t, x)).unwrap();
    assert_eq!(induced_forests(&t, &bad), Err(StatesError::NotAcyclic));
    let mut f = induced_forests(&t, &Matching::empty()).unwrap();
    f.black_roots.pop();
    assert!(matches!(forests_to_matching(&t, &f), Err(StatesError::InvalidForest(_))));
}

#[test]
fn kpw_image_is_the_perfect_dmfs() {
    for (name, d) in corpus::knots_up_to(6) {
        let t = d.tait();
        let gb = d.colour_graph(Colour::Black);
        let mut image = HashSet::new();
        let mut triples = 0;
        for tree in gb.spanning_trees() {
            for &vb in &t.regions_of(Colour::Black) {
                for &vw in &t.regions_of(Colour::White) {
                    let x = kpw(&t, &tree, vb, vw).unwrap();
                    assert!(x.is_perfect(&t) && is_dmf(&t, &x));
                    image.insert(x);
                    triples += 1;
                }
            }
        }
        assert_eq!(image.len(), triples, "{name} injectivity");
        let dmfs: HashSet<Matching> = enumerate_matchings(&t, Filter::PerfectDmf).into_iter().collect();
        assert_eq!(image, dmfs, "{name}");
    }
}

#[test]
fn kpw_with_adjacent_roots_gives_kauffman_states() {
    let d = corpus::diagram("4_1").unwrap();
    let t = d.tait();
    let gb = d.colour_graph(Colour::Black);
    let (vb, vw) = d.marked_arc_regions(0);
    let mut image: Vec<Matching> = gb.spanning_trees().iter().map(|tr| kpw(&t, tr, vb, vw).unwrap()).collect();
    image.sort();
    assert_eq!(image, enumerate_matchings(&t, Filter::KauffmanStates { black: vb, white: vw }));
    assert_eq!(kpw(&t, &[0], vb, vw), Err(StatesError::NotSpanning));
}

#[test]
fn nonextendable_search() {
    for (name, d) in corpus::knots_up_to(6) {
        let t = d.tait();
        let by_filter: Vec<Matching> = enumerate_matchings(&t, Filter::MaximalMatching)
            .into_iter()
            .filter(|m| !m.is_perfect(&t))
            .collect();
        let mut found = find_nonextendable(&t, None);
        found.sort();
        assert_eq!(found, by_filter, "{name}");
    }
    assert!(find_nonextendable(&tait("trefoil"), None).is_empty());
    assert!(find_nonextendable(&tait("figure-eight"), None).is_empty());
    let t15 = crate::diagram::Diagram::build(&corpus::torus_2(15)).unwrap().tait();
    let some = find_nonextendable(&t15, Some(1));
    assert_eq!(some.len(), 1);
    assert!(some[0].is_maximal_matching(&t15) && !some[0].is_perfect(&t15));
}

fn any_matching(name: &'static str) -> impl Strategy<Value = (TaitGraph, Matching)> {
    let t = tait(name);
    let all = enumerate_matchings(&t, Filter::All);
    (0..all.len()).prop_map(move |i| (t.clone(), all[i].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn removing_an_edge_keeps_acyclicity((t, x) in any_matching("5_2"), pick in 0usize..8) {
        prop_assume!(is_dmf(&t, &x) && !x.is_empty());
        let e = x.edges()[pick % x.len()];
        prop_assert!(is_dmf(&t, &x.replace(&[e], &[])));
    }

    #[test]
    fn loops_leave_unmatched_vertices_on_both_sides((t, x) in any_matching("6_2")) {
        for l in monochromatic_loops(&t, &x) {
            let sides = unmatched_per_side(&t, &x, &l);
            prop_assert!(sides[0] >= 1 && sides[1] >= 1, "{:?} {:?}", x, sides);
            if x.is_perfect_admissible(&t) {
                prop_assert_eq!(sides, [1, 1]);
            }
        }
    }
}

/// Unmatched Tait vertices strictly on each side of a loop. Squares are
/// merged across edges off the loop; the loop cuts them into two classes.
fn unmatched_per_side(t: &TaitGraph, x: &Matching, l: &MonochromaticLoop) -> [usize; 2] {
    use crate::diagram::TaitVertex;
    use petgraph::unionfind::UnionFind;
    let squares = t.squares();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); t.num_edges()];
    for (i, s) in squares.iter().enumerate() {
        for e in s.edges() {
            by_edge[e].push(i);
        }
    }
    let mut uf = UnionFind::<usize>::new(squares.len());
    for e in 0..t.num_edges() {
        if !l.edges.contains(&e) {
            uf.union(by_edge[e][0], by_edge[e][1]);
        }
    }
    let a = uf.find(by_edge[l.edges[0]][0]);
    let b = uf.find(by_edge[l.edges[0]][1]);
    assert_ne!(a, b);
    let mut classes: Vec<usize> = (0..squares.len()).map(|i| uf.find(i)).collect();
    classes.sort_unstable();
    classes.dedup();
    assert_eq!(classes.len(), 2);
    let on_loop_regions = l.regions(t);
    let on_loop_crossings = l.crossings();
    let region_p = x.region_partner(t);
    let crossing_p = x.crossing_partner(t);
    let mut side_of = std::collections::HashMap::new();
    for (i, s) in squares.iter().enumerate() {
        let side = usize::from(uf.find(i) == b);
        let verts = [
            TaitVertex::Region(s.black),
            TaitVertex::Region(s.white),
            TaitVertex::Crossing(s.crossings[0]),
            TaitVertex::Crossing(s.crossings[1]),
        ];
        for v in verts {
            let on_loop = match v {
                TaitVertex::Region(r) => on_loop_regions.contains(&r),
                TaitVertex::Crossing(c) => on_loop_crossings.contains(&c),
            };
            if !on_loop {
                let prev = side_of.insert(v, side);
                assert!(prev.is_none() || prev == Some(side));
            }
        }
    }
    let mut count = [0, 0];
    for (v, side) in side_of {
        let unmatched = match v {
            TaitVertex::Region(r) => region_p[r].is_none(),
            TaitVertex::Crossing(c) => crossing_p[c].is_none(),
        };
        if unmatched {
            count[side] += 1;
        }
    }
    count
}
