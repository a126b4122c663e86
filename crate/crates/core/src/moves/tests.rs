use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::*;
use crate::corpus;
use crate::diagram::{Colour, TaitGraph};
use crate::states::{
    enumerate_matchings, is_dmf, jordan_resolution, monochromatic_loops, Filter, InducedSubgraphs, Matching,
};

fn tait(name: &str) -> TaitGraph {
    corpus::diagram(name).unwrap().tait()
}

fn small_knots(max: usize) -> Vec<(&'static str, TaitGraph)> {
    corpus::knots_up_to(max).map(|(n, d)| (n, d.tait())).collect()
}

/// A Jordan resolution is fixed by the smoothing chosen at each crossing.
fn j_key(t: &TaitGraph, x: &Matching) -> Vec<Option<usize>> {
    jordan_resolution(t, x).dots.iter().map(|d| d.map(|k| k % 2)).collect()
}

fn all_moves(t: &TaitGraph, x: &Matching) -> Vec<(Move, Matching)> {
    let mut out = clock_moves(t, x);
    out.extend(click_loop_moves(t, x));
    if let Ok(ms) = click_path_moves(t, x) {
        out.extend(ms);
    }
    out
}

#[test]
fn figure_eight_clock_graph_is_a_path_on_five_states() {
    let t = tait("4_1");
    let d = t.diagram();
    for arc in 0..d.num_arcs() {
        let (black, white) = d.marked_arc_regions(arc);
        let g = build_move_graph(&t, Population::KauffmanStates { black, white }, &[MoveKind::Clock]);
        assert_eq!(g.num_nodes(), 5);
        assert_eq!(verify_connectivity(&g), (true, 1));
        assert_eq!(g.escaped, 0);
        // linear for half the markings; the rest close a square of commuting moves
        assert_eq!(g.is_path_graph(), arc % 2 == 0, "arc {arc}");
    }
}

#[test]
fn trefoil_clock_graph_is_connected_on_three_states() {
    let t = tait("3_1");
    let (black, white) = t.diagram().marked_arc_regions(0);
    let g = build_move_graph(&t, Population::KauffmanStates { black, white }, &[MoveKind::Clock]);
    assert_eq!(g.num_nodes(), 3);
    assert_eq!(verify_connectivity(&g), (true, 1));
    let path = g.shortest_path(0, 2).unwrap();
    assert_eq!(path.first(), Some(&0));
    assert_eq!(path.last(), Some(&2));
}

#[test]
fn clock_graphs_of_marked_diagrams_are_connected() {
    for (name, t) in small_knots(6) {
        let d = t.diagram();
        for arc in 0..d.num_arcs() {
            let (black, white) = d.marked_arc_regions(arc);
            let g = build_move_graph(&t, Population::KauffmanStates { black, white }, &[MoveKind::Clock]);
            assert!(verify_connectivity(&g).0, "{name} arc {arc}");
            for e in &g.edges {
                assert_eq!(e.clock_type, Some(ClockType::I), "{name}");
            }
        }
    }
}

#[test]
fn click_clock_graph_is_connected_for_reduced_diagrams() {
    for (name, t) in small_knots(6) {
        assert!(t.diagram().is_reduced());
        let g = build_move_graph(
            &t,
            Population::PerfectAdmissible,
            &[MoveKind::Clock, MoveKind::ClickLoop, MoveKind::ClickPath],
        );
        assert_eq!(g.escaped, 0, "{name}");
        assert_eq!(verify_connectivity(&g), (true, 1), "{name}");
    }
}

#[test]
fn single_node_graph_is_connected() {
    let g = MoveGraph {
        population: Population::PerfectDmfs,
        kinds: vec![],
        nodes: vec![Matching::empty()],
        edges: vec![],
        escaped: 0,
    };
    assert_eq!(verify_connectivity(&g), (true, 1));
    assert_eq!(g.shortest_path(0, 0), Some(vec![0]));
}

#[test]
fn moves_are_involutions_at_a_fixed_site() {
    for (name, t) in small_knots(5) {
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            for (mv, y) in clock_moves(&t, &x) {
                let back: Vec<_> = clock_moves(&t, &y).into_iter().filter(|(m, _)| m.site == mv.site).collect();
                assert_eq!(back.len(), 1);
                assert_eq!(back[0].1, x, "{name}");
                assert_eq!(back[0].0.direction, mv.direction.map(Direction::reverse));
                assert_eq!(back[0].0.delta_j, mv.delta_j.map(|d| -d));
            }
            for (mv, y) in click_loop_moves(&t, &x) {
                let Site::Loop(l) = &mv.site else { unreachable!() };
                let back = click_loop_moves(&t, &y).into_iter().find(|(m, _)| m.site == Site::Loop(l.clone()));
                assert_eq!(back.unwrap().1, x, "{name}");
            }
            for (mv, y) in click_path_moves(&t, &x).unwrap() {
                let Site::Path { regions, .. } = &mv.site else { unreachable!() };
                let (_, z) = click_path_to(&t, &y, regions[0]).unwrap().unwrap();
                assert_eq!(z, x, "{name}");
            }
        }
    }
}

#[test]
fn clock_moves_change_jordan_count_by_zero_or_two() {
    let mut saw_merge = false;
    for (name, t) in small_knots(6) {
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            let dmf = is_dmf(&t, &x);
            let j = jordan_resolution(&t, &x).num_components();
            for (mv, y) in clock_moves(&t, &x) {
                let delta = mv.delta_j.unwrap();
                assert!([-2, 0, 2].contains(&delta), "{name}: {delta}");
                assert_eq!(mv.clock_type == Some(ClockType::III), delta != 0);
                assert!(y.is_perfect_admissible(&t));
                if dmf {
                    assert_ne!(mv.clock_type, Some(ClockType::II), "{name} {x:?}");
                }
                saw_merge |= j == 3 && delta == -2;
            }
        }
    }
    assert!(saw_merge);
}

#[test]
fn click_moves_preserve_jordan_resolution() {
    for (name, t) in small_knots(6) {
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            let j = j_key(&t, &x);
            for (_, y) in click_loop_moves(&t, &x).into_iter().chain(click_path_moves(&t, &x).unwrap()) {
                assert_eq!(j_key(&t, &y), j, "{name}");
            }
        }
    }
}

#[test]
fn critical_cells_under_moves() {
    for (name, t) in small_knots(5) {
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            let cc = x.critical_cells(&t);
            for (mv, y) in all_moves(&t, &x) {
                let dd = y.critical_cells(&t);
                match mv.kind {
                    MoveKind::Clock | MoveKind::ClickLoop => assert_eq!(cc, dd, "{name}"),
                    _ => {
                        let changed = (cc.black != dd.black) as usize + (cc.white != dd.white) as usize;
                        assert_eq!(changed, 1, "{name}");
                        assert_eq!(cc.crossings, dd.crossings);
                    }
                }
            }
        }
    }
}

#[test]
fn click_path_preserves_unrooted_trees_and_acyclicity() {
    for (name, t) in small_knots(5) {
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            let h = InducedSubgraphs::of(&t, &x);
            let mut hs: Vec<_> = [h.black.clone(), h.white.clone()].into_iter().map(|mut v| { v.sort(); v }).collect();
            hs.sort();
            for (_, y) in click_path_moves(&t, &x).unwrap() {
                let k = InducedSubgraphs::of(&t, &y);
                let mut ks: Vec<_> = [k.black, k.white].into_iter().map(|mut v| { v.sort(); v }).collect();
                ks.sort();
                assert_eq!(hs, ks, "{name}");
                assert_eq!(is_dmf(&t, &x), is_dmf(&t, &y), "{name}");
            }
        }
    }
}

#[test]
fn click_path_requires_perfect_admissible() {
    let t = tait("3_1");
    assert_eq!(click_path_moves(&t, &Matching::empty()).unwrap_err(), MoveError::NotPerfectAdmissible);
}

#[test]
fn click_loops_flip_alternation() {
    let mut two_colour_loops = false;
    for (name, t) in small_knots(5) {
        for x in enumerate_matchings(&t, Filter::All) {
            let loops = monochromatic_loops(&t, &x);
            let moves = click_loop_moves(&t, &x);
            assert_eq!(loops.len(), moves.len());
            if is_dmf(&t, &x) {
                assert!(moves.is_empty());
            }
            let colours: HashSet<Colour> = loops.iter().map(|l| l.colour).collect();
            two_colour_loops |= loops.len() == 2 && colours.len() == 2;
            for (mv, y) in moves {
                let Site::Loop(l) = mv.site else { unreachable!() };
                for &e in &l.edges {
                    assert_ne!(x.contains(e), y.contains(e), "{name}");
                }
                assert!(monochromatic_loops(&t, &y).contains(&l));
                assert_eq!(y.len(), x.len());
            }
        }
    }
    assert!(two_colour_loops);
}

#[test]
fn two_click_connect_on_trefoil() {
    let t = tait("3_1");
    let d = t.diagram();
    let dmfs = enumerate_matchings(&t, Filter::PerfectDmf);
    assert_eq!(dmfs.len(), 18);
    let blacks = d.faces_of(Colour::Black);
    let whites = d.faces_of(Colour::White);
    let mut pairs = 0;
    for x in &dmfs {
        let cc = x.critical_cells(&t);
        for &vb in &blacks {
            for &vw in &whites {
                let (moves, y) = two_click_connect(&t, x, vb, vw).unwrap();
                let expected = (cc.black[0] != vb) as usize + (cc.white[0] != vw) as usize;
                assert_eq!(moves.len(), expected);
                let dd = y.critical_cells(&t);
                assert_eq!((dd.black[0], dd.white[0]), (vb, vw));
                assert!(is_dmf(&t, &y));
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, 18 * blacks.len() * whites.len());
}

#[test]
fn perfect_dmfs_with_same_trees_are_two_clicks_apart() {
    for (name, t) in small_knots(5) {
        let dmfs = enumerate_matchings(&t, Filter::PerfectDmf);
        let mut by_trees: BTreeMap<(Vec<usize>, Vec<usize>), Vec<&Matching>> = BTreeMap::new();
        for x in &dmfs {
            let h = InducedSubgraphs::of(&t, x);
            let (mut b, mut w) = (h.black, h.white);
            b.sort();
            w.sort();
            by_trees.entry((b, w)).or_default().push(x);
        }
        for group in by_trees.values() {
            for x in group {
                for y in group {
                    let cc = y.critical_cells(&t);
                    let (moves, z) = two_click_connect(&t, x, cc.black[0], cc.white[0]).unwrap();
                    assert!(moves.len() <= 2);
                    assert_eq!(&&z, y, "{name}");
                }
            }
        }
    }
}

#[test]
fn two_click_connect_rejects_non_dmfs() {
    let t = tait("3_1");
    assert_eq!(two_click_connect(&t, &Matching::empty(), 0, 1).unwrap_err(), MoveError::NotPerfectDmf);
}

#[test]
fn equal_jordan_trails_iff_equal_unrooted_trees() {
    for (name, t) in small_knots(6) {
        let dmfs = enumerate_matchings(&t, Filter::PerfectDmf);
        let keys: Vec<_> = dmfs
            .iter()
            .map(|x| {
                let h = InducedSubgraphs::of(&t, x);
                (j_key(&t, x), h.black, h.white)
            })
            .collect();
        for a in &keys {
            for b in &keys {
                assert_eq!(a.0 == b.0, (&a.1, &a.2) == (&b.1, &b.2), "{name}");
            }
        }
    }
}

#[test]
fn click_components_are_jordan_classes() {
    for (name, t) in small_knots(6) {
        let g = build_move_graph(&t, Population::PerfectAdmissible, &[MoveKind::ClickLoop, MoveKind::ClickPath]);
        let classes: BTreeSet<_> = g.nodes.iter().map(|x| j_key(&t, x)).collect();
        assert_eq!(g.num_components(), classes.len(), "{name}");
        for e in &g.edges {
            assert_eq!(j_key(&t, &g.nodes[e.a]), j_key(&t, &g.nodes[e.b]));
        }
    }
}

#[test]
fn clock_graph_on_perfect_dmfs_restricts_to_critical_cells() {
    for (name, t) in small_knots(6) {
        let g = build_move_graph(&t, Population::PerfectDmfs, &[MoveKind::Clock]);
        let cells: BTreeSet<_> = g.nodes.iter().map(|x| {
            let c = x.critical_cells(&t);
            (c.black, c.white)
        }).collect();
        assert_eq!(g.num_components(), cells.len(), "{name}");
    }
}

#[test]
fn leaf_spins_preserve_spanning_trees_and_invert() {
    for (name, t) in small_knots(5) {
        let d = t.diagram();
        for colour in Colour::BOTH {
            let g = d.colour_graph(colour);
            for tree in g.spanning_trees() {
                for &leaf in &tree {
                    for dir in [Direction::Cw, Direction::Ccw] {
                        for pivot in g.endpoints(leaf) {
                            match leaf_spin_at(&g, &tree, leaf, pivot, dir) {
                                Ok(spun) => {
                                    assert!(g.is_spanning_tree(&spun), "{name}");
                                    let new: Vec<_> = spun.iter().copied().filter(|e| !tree.contains(e)).collect();
                                    assert_eq!(new.len(), 1);
                                    let back = leaf_spin_at(&g, &spun, new[0], pivot, dir.reverse()).unwrap();
                                    assert_eq!(back, tree, "{name}");
                                }
                                Err(MoveError::NotALeaf(_)) | Err(MoveError::LeafOfAmbient(_)) => {}
                                Err(e) => panic!("{e}"),
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn leaf_spin_errors() {
    let t = tait("4_1");
    let g = t.diagram().colour_graph(Colour::Black);
    let tree = g.spanning_trees().remove(0);
    let absent = (0..g.num_edges()).find(|e| !tree.contains(e)).unwrap();
    assert_eq!(leaf_spin(&g, &tree, absent, Direction::Cw), Err(MoveError::NotALeaf(absent)));
    // a single-edge subgraph has two degree-one endpoints
    let e = tree[0];
    assert_eq!(leaf_spin(&g, &[e], e, Direction::Cw), Err(MoveError::AmbiguousPivot(e)));
}

#[test]
fn leaf_spin_keeps_pseudoforest_cycles() {
    for (name, t) in small_knots(5) {
        let d = t.diagram();
        for x in enumerate_matchings(&t, Filter::PerfectAdmissible) {
            let h = InducedSubgraphs::of(&t, &x);
            for colour in Colour::BOTH {
                let g = d.colour_graph(colour);
                let edges = h.edges(colour).to_vec();
                let cycles = |es: &[usize]| -> Vec<Vec<usize>> {
                    let mut c: Vec<_> = InducedSubgraphs {
                        black: if colour == Colour::Black { es.to_vec() } else { vec![] },
                        white: if colour == Colour::White { es.to_vec() } else { vec![] },
                    }
                    .components(&g)
                    .into_iter()
                    .filter(|c| c.is_unicyclic())
                    .map(|c| c.crossings)
                    .collect();
                    c.sort();
                    c
                };
                for &leaf in &edges {
                    if let Ok(spun) = leaf_spin(&g, &edges, leaf, Direction::Cw) {
                        assert_eq!(g.num_components_of(spun.iter().copied()), g.num_components_of(edges.iter().copied()));
                        let before = cycles(&edges);
                        let after = cycles(&spun);
                        assert_eq!(before.len(), after.len(), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn move_graph_exports() {
    let t = tait("3_1");
    let (black, white) = t.diagram().marked_arc_regions(0);
    let g = build_move_graph(&t, Population::KauffmanStates { black, white }, &[MoveKind::Clock]);
    let dot = g.to_dot("trefoil");
    assert!(dot.starts_with("graph \"trefoil\" {"));
    assert_eq!(dot.matches(" -- ").count(), g.num_edges());
    let json = g.to_json();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(json["edges"][0]["kind"], "clock");
}

