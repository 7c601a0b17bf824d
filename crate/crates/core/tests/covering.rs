use std::collections::BTreeSet;

use hypercover::constructions::{construct_h, KFamily};
use hypercover::cover::{covered_at, covering_report, is_covered, observation1};
use hypercover::{Pattern, TriGraph};
use proptest::prelude::*;

fn arb_trigraph(max_n: usize) -> impl Strategy<Value = TriGraph> {
    (4..=max_n)
        .prop_flat_map(|n| {
            let triples: Vec<[usize; 3]> = (0..n)
                .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
                .collect();
            let len = triples.len();
            (Just(n), proptest::sample::subsequence(triples, 0..=len))
        })
        .prop_map(|(n, edges)| TriGraph::new(n, edges).unwrap())
}

fn patterns() -> Vec<Pattern> {
    vec![
        Pattern::builtin("K4").unwrap(),
        Pattern::builtin("K4-").unwrap(),
        Pattern::builtin("K5-").unwrap(),
        Pattern::new("pair fan", 5, vec![[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap(),
        Pattern::new("loose path", 5, vec![[0, 1, 2], [2, 3, 4]]).unwrap(),
    ]
}

/// Vertices in the image of some injective homomorphism.
fn brute_covered(h: &TriGraph, f: &Pattern) -> BTreeSet<usize> {
    fn rec(h: &TriGraph, f: &Pattern, phi: &mut Vec<usize>, out: &mut BTreeSet<usize>) {
        if phi.len() == f.t() {
            if f.edges().iter().all(|e| h.contains(phi[e[0]], phi[e[1]], phi[e[2]])) {
                out.extend(phi.iter().copied());
            }
            return;
        }
        for v in 0..h.n() {
            if !phi.contains(&v) {
                phi.push(v);
                rec(h, f, phi, out);
                phi.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(h, f, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn detector_is_sound_and_complete(h in arb_trigraph(7)) {
        for f in patterns() {
            let truth = brute_covered(&h, &f);
            for v in 0..h.n() {
                let w = covered_at(&h, v, &f).unwrap();
                prop_assert_eq!(w.is_some(), truth.contains(&v), "{} at {}", f.name(), v);
                prop_assert_eq!(is_covered(&h, v, &f).unwrap(), truth.contains(&v));
                if let Some(phi) = w {
                    prop_assert!(phi.contains(&v));
                    prop_assert!(f.edges().iter().all(|e| h.contains(phi[e[0]], phi[e[1]], phi[e[2]])));
                }
            }
        }
    }

    #[test]
    fn adding_edges_never_uncovers(h in arb_trigraph(7), extra in proptest::collection::vec((0usize..7, 0usize..7, 0usize..7), 0..6)) {
        let n = h.n();
        let add: Vec<[usize; 3]> = extra
            .into_iter()
            .map(|(a, b, c)| [a % n, b % n, c % n])
            .filter(|&[a, b, c]| a != b && b != c && a != c && !h.contains(a, b, c))
            .map(|mut e| { e.sort_unstable(); e })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let bigger = h.with_edges_added(add).unwrap();
        for f in patterns() {
            let before = covering_report(&h, &f);
            let after = covering_report(&bigger, &f);
            prop_assert!(after.uncovered.is_subset(&before.uncovered));
        }
    }

    #[test]
    fn observation1_implies_uncovered(h in arb_trigraph(8)) {
        let f = Pattern::builtin("K4-").unwrap();
        for x in 0..h.n() {
            if observation1(&h, x).unwrap().holds() {
                prop_assert!(!is_covered(&h, x, &f).unwrap());
            }
        }
    }
}

#[test]
fn observation1_holds_on_constructions() {
    let f = Pattern::builtin("K4-").unwrap();
    for m in 1..=5 {
        for which in [KFamily::H1, KFamily::H2, KFamily::H3] {
            let h = construct_h(which, m).unwrap();
            let x = h.distinguished().unwrap();
            assert!(observation1(&h, x).unwrap().holds(), "{which:?} m={m}");
            assert_eq!(covered_at(&h, x, &f).unwrap(), None, "{which:?} m={m}");
        }
    }
}

#[test]
fn report_is_deterministic() {
    let h = construct_h(KFamily::H2, 2).unwrap();
    let f = Pattern::builtin("K4-").unwrap();
    let a = covering_report(&h, &f);
    let b = covering_report(&h, &f);
    assert_eq!(a, b);
    assert_eq!(a.uncovered, BTreeSet::from([0]));
}
