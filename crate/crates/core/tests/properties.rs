mod common;

use proptest::prelude::*;

use semimonotone::cubical::{closure_complex, frontier_complex, open_part_complex};
use semimonotone::semimonotone::check;
use semimonotone::{BooleanFunction, CheckReport, GridFace, Method, SimplicialComplex, VoxelSet, Witness};

fn boolean(max_vars: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_vars).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |bits| BooleanFunction::from_fn(n, |i| bits[i]).unwrap())
    })
}

/// Subsets of a `side^dim` box around the origin.
fn voxels(dim: usize, side: i32) -> impl Strategy<Value = VoxelSet> {
    let total = (side as usize).pow(dim as u32);
    proptest::collection::vec(any::<bool>(), total).prop_map(move |keep| {
        let cells: Vec<Vec<i32>> = (0..total)
            .filter(|&i| keep[i])
            .map(|mut i| {
                (0..dim)
                    .map(|_| {
                        let c = (i % side as usize) as i32;
                        i /= side as usize;
                        c
                    })
                    .collect()
            })
            .collect();
        VoxelSet::new(dim, cells).unwrap()
    })
}

fn any_voxels() -> impl Strategy<Value = VoxelSet> {
    prop_oneof![voxels(1, 8), voxels(2, 4), voxels(3, 3)]
}

fn simplicial() -> impl Strategy<Value = SimplicialComplex> {
    let face = proptest::collection::btree_set(0usize..6, 1..=4);
    proptest::collection::vec(face, 1..6).prop_map(|tops| {
        let tops: Vec<Vec<usize>> = tops.into_iter().map(|t| t.into_iter().collect()).collect();
        SimplicialComplex::from_maximal(6, &tops).unwrap()
    })
}

fn euler(ranks: &[usize]) -> i64 {
    ranks
        .iter()
        .enumerate()
        .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

fn padded(c: &SimplicialComplex) -> Vec<usize> {
    let mut r = c.betti_z2(true).unwrap().ranks;
    r.resize(6, 0);
    r
}

fn shifted(cells: &VoxelSet, by: i32) -> VoxelSet {
    let moved: Vec<Vec<i32>> = cells.cells().map(|c| c.iter().map(|x| x + by).collect()).collect();
    VoxelSet::new(cells.dim(), moved).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn restriction_commutes_with_elimination(psi in boolean(5), j in 0usize..5, k in 0usize..5, c: bool) {
        let n = psi.n_vars();
        prop_assume!(n >= 2 && j < n && k < n && j != k);
        // index of k after removing j, and of j after removing k
        let k_after = if k > j { k - 1 } else { k };
        let j_after = if j > k { j - 1 } else { j };
        let lhs = psi.exists_elim(j).unwrap().restrict(k_after, c).unwrap();
        let rhs = psi.restrict(k, c).unwrap().exists_elim(j_after).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let lhs = psi.forall_elim(j).unwrap().restrict(k_after, c).unwrap();
        let rhs = psi.restrict(k, c).unwrap().forall_elim(j_after).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truth_table_text_roundtrip(psi in boolean(6)) {
        prop_assert_eq!(psi.to_string().parse::<BooleanFunction>().unwrap(), psi);
    }

    #[test]
    fn betti_adds_over_disjoint_union(a in voxels(2, 3), b in voxels(2, 3)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let far = shifted(&b, 10);
        let both = VoxelSet::new(2, a.cells().chain(far.cells())).unwrap();
        let ba = open_part_complex(&a).unwrap().betti_z2(false).unwrap().ranks;
        let bb = open_part_complex(&b).unwrap().betti_z2(false).unwrap().ranks;
        let bu = open_part_complex(&both).unwrap().betti_z2(false).unwrap().ranks;
        let sum: Vec<usize> = ba.iter().zip(&bb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(&bu, &sum);
        prop_assert_eq!(bu[0], both.component_count());
        prop_assert_eq!(both.component_count(), a.component_count() + b.component_count());
    }

    #[test]
    fn open_faces_and_frontier_partition_the_closure(u in any_voxels()) {
        prop_assume!(!u.is_empty());
        let closure = closure_complex(&u).unwrap();
        let frontier = frontier_complex(&u).unwrap();
        let open = u.open_faces();
        prop_assert_eq!(open.len() + frontier.len(), closure.len());
        for f in &open {
            prop_assert!(closure.contains(f) && !frontier.contains(f));
        }
    }

    #[test]
    fn zero_betti_counts_components(u in any_voxels()) {
        prop_assume!(!u.is_empty());
        let b = open_part_complex(&u).unwrap().betti_z2(false).unwrap();
        prop_assert_eq!(b.ranks[0], u.component_count());
    }

    #[test]
    fn connectivity_matches_flood_fill(u in any_voxels()) {
        let sample = common::Sample::new(&u, 4);
        prop_assert_eq!(u.component_count(), sample.components(|_| true));
        prop_assert_eq!(u.is_connected(), u.component_count() <= 1);
    }

    #[test]
    fn star_deletion_link_bookkeeping(x in simplicial(), v in 0usize..6) {
        prop_assume!(x.vertices().contains(&v));
        let star = x.closed_star(v).unwrap();
        let del = x.deletion(v).unwrap();
        let lk = x.link(v).unwrap();
        prop_assert!(star.is_acyclic());
        // X = star ∪ deletion with intersection the link
        prop_assert_eq!(star.bits() | del.bits(), x.bits());
        prop_assert_eq!(star.bits() & del.bits(), lk.bits());
        let chi = |c: &SimplicialComplex| euler(&c.betti_z2(false).unwrap().ranks);
        prop_assert_eq!(chi(&x), chi(&star) + chi(&del) - chi(&lk));
        if !lk.is_empty() && !del.is_empty() {
            let (bx, bd, bl) = (padded(&x), padded(&del), padded(&lk));
            for k in 0..5 {
                let below = if k == 0 { 0 } else { bl[k - 1] };
                prop_assert!(bx[k] <= bd[k] + below, "degree {}", k);
                prop_assert!(bl[k] <= bd[k] + bx[k + 1], "degree {}", k);
            }
        }
    }

    #[test]
    fn witnesses_replay(u in any_voxels()) {
        for m in Method::ALL {
            let r = check(&u, m).unwrap();
            prop_assert_eq!(r.to_string().parse::<CheckReport>().unwrap(), r.clone());
            if let Some(w) = r.witness {
                let reparsed: Witness = w.to_string().parse().unwrap();
                prop_assert!(reparsed.replay(&u).unwrap(), "{} witness {} does not replay", m, w);
            }
        }
    }

    #[test]
    fn verdict_is_translation_invariant(u in voxels(2, 3), by in -5i32..5) {
        for m in Method::ALL {
            prop_assert_eq!(check(&u, m).unwrap().verdict, check(&shifted(&u, by), m).unwrap().verdict);
        }
    }

    #[test]
    fn voxel_and_face_text_roundtrip(u in any_voxels()) {
        prop_assert_eq!(u.to_string().parse::<VoxelSet>().unwrap(), u.clone());
        if !u.is_empty() {
            for f in closure_complex(&u).unwrap().faces() {
                prop_assert_eq!(f.to_string().parse::<GridFace>().unwrap(), *f);
            }
        }
    }
}
