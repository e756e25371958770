use std::collections::BTreeMap;

use lambda_operad::presentation::{phi_combination, psi, BracketExpr};
use lambda_operad::verify::oracle::{self, OracleTree};
use lambda_operad::{operad, GraftMap, Label, LambdaPoly, Operad, Rational, TreeCombination, WeightedTree};
use proptest::prelude::*;

/// Random recursive tree: vertex `i > 0` hangs below a uniformly chosen earlier vertex,
/// then indices are permuted so child order is arbitrary.
fn tree_with(prefix: &'static str, n_max: usize, w_max: u64) -> impl Strategy<Value = WeightedTree> {
    (1..=n_max)
        .prop_flat_map(move |n| {
            (
                prop::collection::vec(any::<prop::sample::Index>(), n),
                prop::collection::vec(1..=w_max, n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(move |(picks, weights, perm)| {
            let n = weights.len();
            let mut parents = vec![None; n];
            for i in 1..n {
                parents[perm[i]] = Some(perm[picks[i].index(i)]);
            }
            let vertices = (0..n)
                .map(|i| (Some(Label::new(&format!("{prefix}{i}")).unwrap()), weights[i]))
                .collect();
            WeightedTree::from_parents(vertices, &parents).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip(t in tree_with("a", 8, 5)) {
        let back: WeightedTree = t.to_string().parse().unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_string(), t.to_string());
    }

    #[test]
    fn canonical_form(t in tree_with("a", 8, 3)) {
        let c = t.canonicalize();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize().to_string(), c.to_string());
        prop_assert_eq!(&c, &t);
        prop_assert_eq!(OracleTree::from_tree(&c).encode(), OracleTree::from_tree(&t).encode());
        prop_assert_eq!(c.weight(), t.weight());
        prop_assert_eq!(c.potential_energy(), t.potential_energy());
    }

    #[test]
    fn canonical_form_forgets_labels_consistently(t in tree_with("a", 7, 2)) {
        let u = t.forget_labels();
        let v = t.with_labels("z").unwrap().forget_labels();
        prop_assert_eq!(u, v);
    }

    #[test]
    fn bracket_print_parse(t in tree_with("x", 5, 3)) {
        for (e, _) in psi(&Operad::new(), &t).unwrap().iter() {
            let back: BracketExpr = e.to_string().parse().unwrap();
            prop_assert_eq!(&back, e);
        }
    }

    /// Exponents are ε(f) ≥ 0, with 0 only for f₀ once T has an edge.
    #[test]
    fn minimality_of_f0(s in tree_with("s", 6, 3), t in tree_with("t", 4, 2), pick in any::<prop::sample::Index>()) {
        let v = s.vertices().nth(pick.index(s.len())).unwrap();
        let w = s.vertex_weight(v).unwrap();
        // give T the slot's weight by scaling its root
        let mut weights = t.weights();
        let rest: u64 = weights[1..].iter().sum();
        prop_assume!(w > rest);
        weights[0] = w - rest;
        let t = t.reweighted(&weights).unwrap();
        let op = Operad::new();
        let out = op.compose_lambda(&s, v, &t).unwrap();
        for f in GraftMap::all(&s, v, &t).unwrap() {
            let tree = operad::compose_with_map(&s, v, &t, &f).unwrap();
            let eps = operad::epsilon(&s, v, &t, &f).unwrap();
            prop_assert_eq!(out.coefficient(&tree), LambdaPoly::lambda_pow(eps as u32));
            if t.len() > 1 && !f.is_empty() {
                prop_assert_eq!(eps == 0, f.is_minimal());
            }
        }
        let nap = operad::nap_compose(&s, v, &t).unwrap();
        prop_assert_eq!(out.specialize(&Rational::zero()), TreeCombination::basis(nap));
    }

    /// λ = 1 with unit weights is the classical pre-Lie composition, on trees
    /// larger than the exhaustive universe.
    #[test]
    fn prelie_specialization_on_larger_trees(s in tree_with("s", 6, 1), t in tree_with("t", 4, 1), pick in any::<prop::sample::Index>()) {
        let v = s.vertices().nth(pick.index(s.len())).unwrap();
        let mut weights = s.weights();
        weights[v.index()] = t.len() as u64;
        let s = s.reweighted(&weights).unwrap();
        let v = s.vertices().nth(v.index()).unwrap();
        let out = Operad::new().compose_lambda(&s, v, &t).unwrap().specialize(&Rational::one());
        let (os, ot) = (OracleTree::from_tree(&s), OracleTree::from_tree(&t));
        let slot = os.index_of(s.label(v).unwrap().unwrap().as_str());
        let mut expected = oracle::Multiset::new();
        oracle::multiset(&oracle::prelie_compose(&os, slot, &ot), 1, &mut expected);
        let got: BTreeMap<String, i64> = out
            .iter()
            .map(|(k, p)| (OracleTree::from_tree(k).encode(), p.eval(&Rational::one()).to_i64_pair().unwrap().0))
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn psi_phi_round_trip_on_six_vertices(t in tree_with("x", 6, 2)) {
        let op = Operad::new();
        let back = phi_combination(&op, &psi(&op, &t).unwrap()).unwrap();
        prop_assert_eq!(back, TreeCombination::basis(t));
    }

    #[test]
    fn arrow_is_a_sum_of_grafts(t in tree_with("t", 5, 3), s in tree_with("s", 3, 3)) {
        let out = Operad::new().arrow(&t, &s).unwrap();
        prop_assert_eq!(out.len(), t.len());
        for v in t.vertices() {
            let g = operad::graft_at(&t, v, &s).unwrap();
            let h = t.height(v).unwrap() as u32;
            prop_assert_eq!(out.coefficient(&g), LambdaPoly::lambda_pow(s.weight() as u32 * h));
        }
        prop_assert_eq!(out.coefficient(&operad::butcher_product(&t, &s).unwrap()), LambdaPoly::one());
    }
}
