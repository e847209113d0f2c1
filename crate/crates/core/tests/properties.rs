use proptest::prelude::*;

use ty_core::chain::{transversal, Side};
use ty_core::factorization::{canonical_tableau, verify_tableau};
use ty_core::level_sets::signature;
use ty_core::poset::{ColorMove, Monomial};
use ty_core::tropical::{components, deg_vector, f_dp, f_oracle, f_vector, max_secant, symbolic_member};
use ty_core::verify::{check_chain, is_cover};

fn monomial(max_n: usize, max_e: u32) -> impl Strategy<Value = Monomial> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_e, n + 1).prop_map(|v| Monomial::new(v).unwrap())
    })
}

/// Two or three monomials from the same slice.
fn same_slice(k: usize) -> impl Strategy<Value = Vec<Monomial>> {
    (1..=5usize, 0..=6u32).prop_flat_map(move |(n, m)| {
        let one = prop::collection::vec(0..=m, n).prop_filter_map("degree", move |head| {
            let s: u32 = head.iter().sum();
            (s <= m).then(|| {
                let mut v = head;
                v.push(m - s);
                Monomial::new(v).unwrap()
            })
        });
        prop::collection::vec(one, k)
    })
}

proptest! {
    #[test]
    fn weight_rank_relation(mu in monomial(8, 4)) {
        let (n, m) = (mu.n() as i64, mu.degree() as i64);
        prop_assert_eq!(mu.weight(), m * n - 2 * mu.rank());
    }

    #[test]
    fn leq_antisymmetric(v in same_slice(2)) {
        let (a, b) = (&v[0], &v[1]);
        if a.leq(b).unwrap() && b.leq(a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn leq_transitive(v in same_slice(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        if a.leq(b).unwrap() && b.leq(c).unwrap() {
            prop_assert!(a.leq(c).unwrap());
        }
    }

    #[test]
    fn color_moves_are_covers(mu in monomial(6, 4), c in 1..=6usize) {
        if c <= mu.n() {
            if let Ok(nu) = mu.apply_color(ColorMove::new(c).unwrap()) {
                prop_assert!(is_cover(&mu, &nu));
                prop_assert_eq!(nu.unapply_color(ColorMove::new(c).unwrap()).unwrap(), mu);
            }
        }
    }

    #[test]
    fn tau_reverses_order(v in same_slice(2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(a.leq(b).unwrap(), b.tau().leq(&a.tau()).unwrap());
        prop_assert_eq!(a.tau().weight(), -a.weight());
    }

    #[test]
    fn partition_round_trip(mu in monomial(8, 4)) {
        prop_assert_eq!(Monomial::from_partition(&mu.to_partition()), mu.clone());
        let c = mu.to_partition().conjugate();
        prop_assert_eq!(c.conjugate(), mu.to_partition());
    }

    #[test]
    fn f_matches_oracle_and_tau(mu in monomial(9, 4)) {
        let f = f_vector(&mu);
        for r in 0..=max_secant(mu.n()) {
            prop_assert_eq!(f_dp(&mu, r).unwrap(), f_oracle(&mu, r).unwrap());
            prop_assert_eq!(f[r], f_dp(&mu.tau(), r).unwrap());
        }
        prop_assert!(f.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(f[0], mu.degree());
    }

    #[test]
    fn f_from_deg(mu in monomial(9, 4)) {
        let f = f_vector(&mu);
        let deg = deg_vector(&mu);
        for r in 0..f.len() {
            let s: u32 = (r..deg.len()).map(|j| (j + 1 - r) as u32 * deg[j]).sum();
            prop_assert_eq!(f[r], s);
        }
        let total: u32 = deg.iter().enumerate().map(|(j, &d)| (j as u32 + 1) * d).sum();
        prop_assert_eq!(total, mu.degree());
    }

    #[test]
    fn symbolic_membership_by_components(mu in monomial(6, 3), s in 0..=4u32) {
        for r in 1..=max_secant(mu.n()) {
            let direct = components(mu.n(), r).unwrap().iter().all(|c| c.sum(&mu) >= s);
            prop_assert_eq!(symbolic_member(&mu, r, s).unwrap(), direct);
        }
    }

    #[test]
    fn tableau_is_valid(mu in monomial(8, 4)) {
        let t = canonical_tableau(&mu).unwrap();
        prop_assert!(verify_tableau(&mu, &t));
    }

    #[test]
    fn transversal_chains_stay_in_level(mu in monomial(7, 3)) {
        let sig = signature(&mu);
        for side in [Side::Left, Side::Right] {
            let c = transversal(&mu, side).unwrap();
            let rep = check_chain(c.elements());
            prop_assert!(rep.ok(), "{:?}", rep);
            prop_assert!(c.contains(&mu));
            prop_assert!(c.elements().iter().all(|x| signature(x) == sig));
        }
    }
}
