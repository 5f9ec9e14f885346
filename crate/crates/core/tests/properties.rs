//! Property tests for the algebra, the action, the orders, and the
//! divisibility oracles, plus differential tests against the brute-force
//! reference implementations.

use proptest::prelude::*;

use eqgb::algebra::{
    Field, IndexConstraint, Monomial, Polynomial, Ring, SymbolSchema, Variable,
};
use eqgb::engine::{reduce, Basis};
use eqgb::order::{Grading, OrderSpec};
use eqgb::symmetry::{canonicalize_monomial, IncWitness};
use eqgb::wpo::{self, brute, LabelledTree, PosetTable};

fn onefactor_ring() -> Ring {
    Ring::new(
        vec![
            SymbolSchema::new("y", vec![], 2, IndexConstraint::StrictlyDecreasing).unwrap(),
            SymbolSchema::new("x", vec![], 1, IndexConstraint::None).unwrap(),
        ],
        Field::Rational,
    )
    .unwrap()
}

fn onefactor_order(r: &Ring) -> OrderSpec {
    OrderSpec::new(
        r,
        vec![r.schema_by_name("y").unwrap(), r.schema_by_name("x").unwrap()],
        Grading::None,
    )
    .unwrap()
}

fn row_ring(k: u32) -> Ring {
    Ring::new(
        vec![SymbolSchema::new("x", vec![k], 1, IndexConstraint::None).unwrap()],
        Field::Rational,
    )
    .unwrap()
}

/// Builds a one-factor-ring monomial out of raw generator data: each entry
/// is either an x factor or a y factor.
fn of_monomial(r: &Ring, specs: &[(u8, u8, u8, u8)]) -> Monomial {
    let x = r.schema_by_name("x").unwrap();
    let y = r.schema_by_name("y").unwrap();
    let factors = specs.iter().map(|&(kind, a, b, e)| {
        let exp = (e % 3) + 1;
        if kind % 2 == 0 {
            let i = (a % 6) + 1;
            (Variable::new(r, x, vec![], vec![i as u32]).unwrap(), exp as u32)
        } else {
            let i = (a % 6) + 2;
            let j = (b % (i - 1)) + 1;
            (Variable::new(r, y, vec![], vec![i as u32, j as u32]).unwrap(), exp as u32)
        }
    });
    Monomial::from_factors(factors)
}

fn row_monomial(r: &Ring, k: u32, specs: &[(u8, u8, u8)]) -> Monomial {
    let x = r.schema_by_name("x").unwrap();
    let factors = specs.iter().map(|&(row, col, e)| {
        (
            Variable::new(r, x, vec![(row as u32 % k) + 1], vec![(col as u32 % 7) + 1]).unwrap(),
            (e as u32 % 3) + 1,
        )
    });
    Monomial::from_factors(factors)
}

/// Witness over a support from per-gap slack values.
fn witness_for(support: &std::collections::BTreeSet<u32>, slacks: &[u8]) -> IncWitness {
    let mut pairs = Vec::new();
    let mut prev: Option<(u32, u32)> = None;
    for (i, &s) in support.iter().enumerate() {
        let slack = slacks.get(i).copied().unwrap_or(0) as u32 % 3;
        let lower = match prev {
            None => s,
            Some((ps, pt)) => pt + (s - ps),
        };
        let t = lower + slack;
        pairs.push((s, t));
        prev = Some((s, t));
    }
    IncWitness::new(pairs).unwrap()
}

fn mono_spec() -> impl Strategy<Value = Vec<(u8, u8, u8, u8)>> {
    proptest::collection::vec(any::<(u8, u8, u8, u8)>(), 0..4)
}

/// Node `i > 0` hangs under `parents[i-1] % i`, so every rooted shape on
/// `labels.len()` vertices is reachable.
fn tree_from_parents(labels: &[usize], parents: &[usize]) -> LabelledTree {
    let n = labels.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 1..n {
        let p = parents.get(i - 1).copied().unwrap_or(0) % i;
        children[p].push(i);
    }
    fn mk(i: usize, labels: &[usize], children: &[Vec<usize>]) -> LabelledTree {
        LabelledTree::node(
            labels[i],
            children[i].iter().map(|&c| mk(c, labels, children)).collect(),
        )
    }
    mk(0, labels, &children)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mono_mul_laws(a in mono_spec(), b in mono_spec(), c in mono_spec()) {
        let r = onefactor_ring();
        let (u, v, w) = (of_monomial(&r, &a), of_monomial(&r, &b), of_monomial(&r, &c));
        prop_assert_eq!(u.mul(&v), v.mul(&u));
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        // divides(u, v) iff some w with u*w = v.
        prop_assert!(u.divides(&u.mul(&w)));
        if let Some(q) = u.quotient_of(&v) {
            prop_assert_eq!(u.mul(&q), v.clone());
        }
        let l = u.lcm(&v);
        prop_assert!(u.divides(&l) && v.divides(&l));
        prop_assert!(l.divides(&u.mul(&v)));
    }

    #[test]
    fn poly_arithmetic_is_exact(
        a in proptest::collection::vec((mono_spec(), -9i64..10), 0..5),
        b in proptest::collection::vec((mono_spec(), -9i64..10), 0..5),
    ) {
        let r = onefactor_ring();
        let build = |specs: &[(Vec<(u8, u8, u8, u8)>, i64)]| {
            Polynomial::from_terms(
                specs.iter().map(|(m, c)| (of_monomial(&r, m), Field::Rational.from_i64(*c))),
            )
            .unwrap()
        };
        let (f, g) = (build(&a), build(&b));
        prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f.clone());
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn action_preserves_structure(
        a in mono_spec(),
        b in mono_spec(),
        s1 in proptest::collection::vec(any::<u8>(), 12),
        s2 in proptest::collection::vec(any::<u8>(), 12),
    ) {
        let r = onefactor_ring();
        let (u, v) = (of_monomial(&r, &a), of_monomial(&r, &b));
        let mut support = u.support();
        support.append(&mut v.support());
        let sigma = witness_for(&support, &s1);
        let targets: std::collections::BTreeSet<u32> =
            sigma.pairs().iter().map(|&(_, t)| t).collect();
        let pi = witness_for(&targets, &s2);

        // Ring-endomorphism behaviour: products and lcms are preserved.
        prop_assert_eq!(
            sigma.apply(&u.mul(&v)).unwrap(),
            sigma.apply(&u).unwrap().mul(&sigma.apply(&v).unwrap())
        );
        prop_assert_eq!(
            sigma.apply(&u.lcm(&v)).unwrap(),
            sigma.apply(&u).unwrap().lcm(&sigma.apply(&v).unwrap())
        );
        // Monoid action: composing witnesses equals sequential application.
        let composed = IncWitness::compose(&pi, &sigma).unwrap();
        prop_assert_eq!(
            composed.apply(&u).unwrap(),
            pi.apply(&sigma.apply(&u).unwrap()).unwrap()
        );
        // Orbit canonical form is constant on orbits and idempotent.
        let (cu, back) = canonicalize_monomial(&u);
        prop_assert_eq!(back.apply(&cu).unwrap(), u.clone());
        prop_assert_eq!(canonicalize_monomial(&sigma.apply(&u).unwrap()).0, cu.clone());
        prop_assert_eq!(canonicalize_monomial(&cu).0, cu);
    }

    #[test]
    fn order_is_total_multiplicative_and_compatible(
        a in mono_spec(),
        b in mono_spec(),
        c in mono_spec(),
        s in proptest::collection::vec(any::<u8>(), 12),
    ) {
        use std::cmp::Ordering;
        let r = onefactor_ring();
        let spec = onefactor_order(&r);
        let (u, v, w) = (of_monomial(&r, &a), of_monomial(&r, &b), of_monomial(&r, &c));
        // Totality and antisymmetry.
        match spec.compare(&u, &v) {
            Ordering::Equal => prop_assert_eq!(&u, &v),
            o => prop_assert_eq!(spec.compare(&v, &u), o.reverse()),
        }
        prop_assert_eq!(spec.compare(&u, &v), spec.compare(&u.mul(&w), &v.mul(&w)));
        prop_assert_ne!(spec.compare(&Monomial::one(), &u.mul(&of_monomial(&r, &[(0,0,0,0)]))), Ordering::Greater);
        // Inc(N)-compatibility on this sample.
        let mut support = u.support();
        support.append(&mut v.support());
        let pi = witness_for(&support, &s);
        let (pu, pv) = (pi.apply(&u).unwrap(), pi.apply(&v).unwrap());
        prop_assert_eq!(spec.compare(&pu, &pv), spec.compare(&u, &v));
        prop_assert_ne!(spec.compare(&pu, &u), Ordering::Less);
    }

    #[test]
    fn higman_and_multiset_match_brute(
        s in proptest::collection::vec(0usize..3, 0..7),
        t in proptest::collection::vec(0usize..3, 0..7),
        pairs in proptest::collection::vec((0usize..3, 0usize..3), 0..4),
    ) {
        if let Ok(poset) = PosetTable::from_pairs(3, &pairs) {
            prop_assert_eq!(
                wpo::higman_leq(&s, &t, &poset).unwrap(),
                brute::higman_leq(&s, &t, &poset).unwrap()
            );
            prop_assert_eq!(
                wpo::multiset_leq(&s, &t, &poset).unwrap(),
                brute::multiset_leq(&s, &t, &poset).unwrap()
            );
        }
    }

    #[test]
    fn kruskal_matches_brute(
        a_spec in proptest::collection::vec(0usize..3, 1..6),
        b_spec in proptest::collection::vec(0usize..3, 1..6),
        shape_a in proptest::collection::vec(any::<usize>(), 0..5),
        shape_b in proptest::collection::vec(any::<usize>(), 0..5),
    ) {
        let ta = tree_from_parents(&a_spec, &shape_a);
        let tb = tree_from_parents(&b_spec, &shape_b);
        let chain = PosetTable::chain(3);
        prop_assert_eq!(
            wpo::kruskal_leq(&ta, &tb, &chain).unwrap(),
            brute::kruskal_leq(&ta, &tb, &chain).unwrap()
        );
    }

    /// The production search and the exhaustive one must agree exactly,
    /// including the returned witness (both are leftmost). On the row ring
    /// this also cross-checks the Higman word encoding fast path, which the
    /// brute-force search does not use.
    #[test]
    fn pi_divides_matches_brute_row(
        u in proptest::collection::vec(any::<(u8, u8, u8)>(), 0..4),
        v in proptest::collection::vec(any::<(u8, u8, u8)>(), 0..5),
    ) {
        let r = row_ring(2);
        let (mu, mv) = (row_monomial(&r, 2, &u), row_monomial(&r, 2, &v));
        let fast = wpo::pi_divides(&r, &mu, &mv).unwrap();
        let slow = brute::pi_divides(&r, &mu, &mv).unwrap();
        prop_assert_eq!(&fast, &slow);
        if let Some(w) = fast {
            prop_assert!(w.apply(&mu).unwrap().divides(&mv));
        }
    }

    #[test]
    fn pi_divides_matches_brute_onefactor(
        u in mono_spec(),
        v in mono_spec(),
    ) {
        let r = onefactor_ring();
        let (mu, mv) = (of_monomial(&r, &u), of_monomial(&r, &v));
        let fast = wpo::pi_divides(&r, &mu, &mv).unwrap();
        let slow = brute::pi_divides(&r, &mu, &mv).unwrap();
        prop_assert_eq!(&fast, &slow);
        if let Some(w) = fast {
            prop_assert!(w.apply(&mu).unwrap().divides(&mv));
        }
    }

    /// Long random reductions: exercises termination of division under the
    /// lex well-order and checks the division contract on every run.
    #[test]
    fn reduce_contract_on_random_inputs(
        gens in proptest::collection::vec(
            proptest::collection::vec((mono_spec(), -3i64..4), 1..3),
            1..4
        ),
        target in proptest::collection::vec((mono_spec(), -9i64..10), 0..6),
    ) {
        let r = onefactor_ring();
        let spec = onefactor_order(&r);
        let build = |specs: &[(Vec<(u8, u8, u8, u8)>, i64)]| {
            Polynomial::from_terms(
                specs.iter().map(|(m, c)| (of_monomial(&r, m), Field::Rational.from_i64(*c))),
            )
            .unwrap()
        };
        let els: Vec<Polynomial> =
            gens.iter().map(|g| build(g)).filter(|f| !f.is_zero()).collect();
        prop_assume!(!els.is_empty());
        let basis = Basis::new(r.clone(), spec.clone(), els).unwrap();
        let f = build(&target);
        let (rem, steps) = reduce(&f, &basis).unwrap();
        // Certificate reconstructs the input exactly.
        let mut rebuilt = rem.clone();
        for step in &steps {
            let g = &basis.elements()[step.basis_index];
            let pg = step.witness.apply(g).unwrap();
            rebuilt = rebuilt.add(&pg.mul_term(&step.multiplier, &step.coeff).unwrap()).unwrap();
        }
        prop_assert_eq!(rebuilt, f);
        // No remainder monomial is Pi-divisible by any leading monomial.
        for (m, _) in rem.terms() {
            for g in basis.elements() {
                let glm = basis.order().leading_monomial(g).unwrap();
                prop_assert!(wpo::pi_divides(basis.ring(), glm, m).unwrap().is_none());
            }
        }
    }
}
