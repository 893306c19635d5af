mod common;

use parakit_core::graphlab::algorithms::ds_solver;
use parakit_core::graphlab::oracles::{oracle_hamiltonian, oracle_iso};
use parakit_core::graphlab::params::{
    arboricity, degeneracy, ds_number, hadwiger, is_planar, kij_index, treewidth, vc_number,
};
use parakit_core::graphlab::problems::{arboricity_param, degeneracy_param, hadwiger_param, kij_param, treewidth_param};
use parakit_core::graphlab::wl::{refine, refines, wl, WlOutcome};
use parakit_core::graphlab::{canonical_form, corpus, decode_graph6, encode_graph6, graphs_of_order, Graph, GraphNatPair};
use parakit_core::kernel::param_leq;
use parakit_core::meter::Meter;
use parakit_core::Error;

#[test]
fn graph6_single_edge() {
    assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2));
    assert_eq!(encode_graph6(&Graph::complete(2)), "A_");
    assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
    assert!(matches!(decode_graph6("D"), Err(Error::Graph6 { .. })));
    assert!(decode_graph6("").is_err());
}

#[test]
fn graph6_matches_the_reference_encoder() {
    for g in &corpus(6).unwrap() {
        let w = encode_graph6(g);
        assert_eq!(w, common::graph6(g));
        assert_eq!(&decode_graph6(&w).unwrap(), g);
    }
}

#[test]
fn parameters_on_named_graphs() {
    let (k4, c5) = (Graph::complete(4), Graph::cycle(5));
    assert_eq!((degeneracy(&k4), degeneracy(&c5), degeneracy(&Graph::empty(4))), (3, 2, 0));
    assert_eq!(arboricity(&Graph::path(5)).unwrap(), 1);
    assert_eq!(arboricity(&Graph::empty(3)).unwrap(), 0);
    assert_eq!(arboricity(&k4).unwrap(), 2);
    assert_eq!(arboricity(&c5).unwrap(), 2);
    assert_eq!(treewidth(&Graph::star(4)).unwrap(), 1);
    assert_eq!(treewidth(&Graph::cycle(7)).unwrap(), 2);
    assert_eq!(treewidth(&Graph::complete(5)).unwrap(), 4);
    assert_eq!(vc_number(&Graph::path(4)).unwrap(), 2);
    assert_eq!(ds_number(&Graph::path(4)).unwrap(), 2);
    assert_eq!(hadwiger(&k4).unwrap(), 4);
    assert_eq!(hadwiger(&Graph::path(4)).unwrap(), 2);
    assert_eq!(kij_index(&Graph::empty(3)).unwrap(), 1);
    assert_eq!(kij_index(&Graph::complete_bipartite(2, 2)).unwrap(), 3);
}

#[test]
fn hexagon_and_two_triangles_need_more_than_colour_refinement() {
    let c6 = Graph::cycle(6);
    let tt = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
    assert_eq!(wl(1, &c6, &tt).unwrap(), WlOutcome::SameColors);
    assert_eq!(wl(2, &c6, &tt).unwrap(), WlOutcome::Distinguished);
    assert!(!oracle_iso(&c6, &tt).unwrap());
    assert!(wl(4, &c6, &tt).is_err());
}

#[test]
fn higher_dimensions_refine_vertex_classes() {
    for g in &corpus(6).unwrap() {
        let parts: Vec<_> = (1..=3).map(|k| refine(k, g, &mut Meter::new()).unwrap().vertex_partition()).collect();
        assert!(refines(&parts[1], &parts[0]), "{}", encode_graph6(g));
        assert!(refines(&parts[2], &parts[1]), "{}", encode_graph6(g));
    }
}

#[test]
fn dominating_set_member_on_a_star() {
    let x = GraphNatPair::new(Graph::star(5), 1);
    assert!(ds_solver(2).decide(&x));
    assert!(!ds_solver(2).decide(&GraphNatPair::new(Graph::empty(3), 2)));
}

#[test]
fn isomorphism_and_hamiltonicity_oracles() {
    let p = Graph::path(4);
    let q = p.permute(&[2, 0, 3, 1]);
    assert!(oracle_iso(&p, &q).unwrap());
    assert!(!oracle_iso(&p, &Graph::star(3)).unwrap());
    assert!(oracle_hamiltonian(&Graph::complete(4)).unwrap());
    assert!(!oracle_hamiltonian(&Graph::star(3)).unwrap());
    assert!(oracle_hamiltonian(&Graph::cycle(5)).unwrap());
    assert!(!oracle_hamiltonian(&Graph::complete(2)).unwrap());
    assert!(oracle_hamiltonian(&Graph::empty(17)).is_err());
}

#[test]
fn isomorphism_agrees_with_canonical_forms() {
    let g5 = graphs_of_order(5).unwrap();
    for g in &g5 {
        assert_eq!(&canonical_form(g).unwrap(), g);
        for h in &g5 {
            assert_eq!(oracle_iso(g, h).unwrap(), g == h);
        }
    }
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]);
    let h = g.permute(&[4, 2, 0, 1, 3]);
    assert!(common::isomorphic(&g, &h));
    assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
}

#[test]
fn parameters_match_the_brute_force_definitions() {
    for g in &corpus(6).unwrap() {
        let w = encode_graph6(g);
        assert_eq!(degeneracy(g) as u64, common::degeneracy(g), "{w}");
        assert_eq!(treewidth(g).unwrap() as u64, common::treewidth(g), "{w}");
        assert_eq!(arboricity(g).unwrap() as u64, common::arboricity(g), "{w}");
        assert_eq!(kij_index(g).unwrap() as u64, common::kij_index(g), "{w}");
        assert_eq!(vc_number(g).unwrap() as u64, common::vc_number(g), "{w}");
        assert_eq!(ds_number(g).unwrap() as u64, common::ds_number(g), "{w}");
        assert_eq!(hadwiger(g).unwrap() as u64, common::hadwiger(g), "{w}");
    }
}

#[test]
fn planarity_matches_small_minors() {
    assert!(!is_planar(&Graph::complete(5)).unwrap());
    assert!(!is_planar(&Graph::complete_bipartite(3, 3)).unwrap());
    assert!(is_planar(&Graph::complete(4)).unwrap());
    let planar = corpus(7).unwrap().iter().filter(|g| is_planar(g).unwrap()).count();
    // 1044 graphs on up to seven vertices; the remainder contain K5 or K3,3
    assert_eq!(planar, 1 + 2 + 4 + 11 + 33 + 142 + 822);
}

#[test]
fn parameter_chain_on_seven_vertices() {
    let u = corpus(7).unwrap();
    let chain = [
        (degeneracy_param(), hadwiger_param()),
        (kij_param(), degeneracy_param()),
        (degeneracy_param(), treewidth_param()),
        (arboricity_param(), degeneracy_param()),
        (degeneracy_param(), arboricity_param()),
    ];
    for (k, t) in &chain {
        let r = param_leq(k, t, &u, 4);
        assert!(r.is_bounded(), "{} <= {}", k.name(), t.name());
    }
    let kd = param_leq(&kij_param(), &degeneracy_param(), &u, 4);
    assert_eq!(kd.table.first_excess(|d| d + 1), None);
    let da = param_leq(&degeneracy_param(), &arboricity_param(), &u, 3);
    assert_eq!(da.table.first_excess(|a| 2 * a - 1), None);
    for g in &u {
        let (d, a) = (degeneracy(g), arboricity(g).unwrap());
        assert!(a <= d && (a == 0 || d < 2 * a));
        assert!(g.edge_count() <= d * g.order());
    }
}
