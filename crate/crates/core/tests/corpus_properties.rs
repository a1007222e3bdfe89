//! Properties swept over the standard corpus.

use proptest::prelude::*;
use toplat::corpus::{self, Entry};
use toplat::duality::dual_group;
use toplat::group::iso::are_isomorphic;
use toplat::group::{direct_product, gcd, parse_group};
use toplat::pontryagin::{generate_topology, NeighborhoodFamily};
use toplat::topology::{analyze, topology_lattice, verify_product_theorem};
use toplat::Caps;

fn caps() -> Caps {
    Caps::default()
}

fn corpus_upto(order: usize) -> Vec<Entry> {
    corpus::standard(order).unwrap()
}

#[test]
fn reverse_inclusion_order_everywhere() {
    for e in corpus_upto(32) {
        let l = topology_lattice(&e.group, &caps()).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let by_kernel = l.kernel(b).is_subgroup_of(l.kernel(a));
                assert_eq!(l.lattice().leq(a, b), by_kernel, "{}", e.name);
            }
        }
        assert!(l.topology(l.lattice().top()).is_discrete());
        assert!(l.topology(l.lattice().bottom()).is_anti_discrete());
    }
}

#[test]
fn nilpotent_groups_up_to_32() {
    for e in corpus::nilpotent(32).unwrap() {
        let r = analyze(&e.group, &caps()).unwrap();
        assert!(r.semimodular, "{}", e.name);
        assert!(r.jordan_holder.uniform, "{}", e.name);
        assert!(r.passed(), "{}: {:?}", e.name, r.violations);
    }
}

#[test]
fn non_nilpotent_groups_report_no_violations() {
    for e in corpus_upto(24).into_iter().filter(|e| !e.is_nilpotent()) {
        let r = analyze(&e.group, &caps()).unwrap();
        assert_eq!(r.nilpotency_class, None);
        assert!(r.passed(), "{}", e.name);
    }
}

#[test]
fn abelian_groups_are_self_dual() {
    for e in corpus::abelian(16).unwrap() {
        let d = dual_group(&e.group).unwrap();
        assert_eq!(d.group.order(), e.order());
        assert!(
            are_isomorphic(&e.group, &d.group).unwrap().is_some(),
            "{}",
            e.name
        );
    }
}

fn entry() -> impl Strategy<Value = Entry> {
    let all = corpus_upto(24);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `{H, H∩K, K}` is a basis whose topology is the join of `τ_H` and `τ_K`.
    #[test]
    fn three_set_basis_generates_the_join(e in entry(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let l = topology_lattice(&e.group, &caps()).unwrap();
        let (a, b) = (i.index(l.len()), j.index(l.len()));
        let (h, k) = (l.kernel(a), l.kernel(b));
        let both = h.intersection(k);
        let family = NeighborhoodFamily::new(&e.group, vec![h.members().clone(), both.members().clone(), k.members().clone()]).unwrap();
        let tau = generate_topology(&family).unwrap();
        prop_assert_eq!(Some(l.index_of(tau.kernel().members()).unwrap()), Some(l.lattice().join(a, b)));
    }

    #[test]
    fn coprime_prime_exponent_products(p in prop::sample::select(vec![2usize, 3, 5, 7]), k in 1usize..=2, f in entry()) {
        prop_assume!(gcd(p, f.order()) == 1 && p.pow(k as u32) * f.order() <= 64);
        let h = parse_group(&format!("Z^k {p} {k}")).unwrap();
        let g = direct_product(&h, &f.group).unwrap();
        let big = Caps { isomorphism_size: 256, ..caps() };
        let r = verify_product_theorem(&g, &big).unwrap();
        prop_assert!(r.passed, "Z^k {} {} x {}: {:?}", p, k, f.name, r.violations);
    }
}
