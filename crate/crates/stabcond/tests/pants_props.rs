// The contraction value must not depend on how a network is written down.

use proptest::prelude::*;
use stabcond::anyon::{z4_ds_wall, AnyonTheory};
use stabcond::pants::{build_standard_network, contract, insert_transparent, PantsNetwork, Scenario};

fn scenarios() -> Vec<PantsNetwork> {
    let z4 = AnyonTheory::dz(4);
    let ds = AnyonTheory::double_semion();
    let w = z4_ds_wall().unwrap();
    let mut out =
        vec![build_standard_network(&Scenario::TorusWithWalls { theories: vec![z4.clone(), ds.clone()], walls: vec![w.clone(), w.transpose()] }).unwrap()];
    for n in 1..=3 {
        out.push(build_standard_network(&Scenario::TorusWithPatches { bulk: z4.clone(), patch: ds.clone(), wall: w.clone(), n }).unwrap());
    }
    out
}

fn relabel(net: &PantsNetwork, perm: &[usize], link_order: &[usize], flips: &[bool]) -> PantsNetwork {
    let mut out = PantsNetwork::new(net.theories.clone());
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
        out.add(net.nodes[old].clone());
    }
    for (k, &i) in link_order.iter().enumerate() {
        let (a, b) = net.links[i];
        let (a, b) = ((inv[a.0], a.1), (inv[b.0], b.1));
        out.link(if flips[k] { b } else { a }, if flips[k] { a } else { b });
    }
    out
}

fn shuffled_views() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<bool>, prop::sample::Index)> {
    let sizes: Vec<(usize, usize)> = scenarios().iter().map(|n| (n.nodes.len(), n.links.len())).collect();
    (0..sizes.len()).prop_flat_map(move |w| {
        let (n, l) = sizes[w];
        (
            Just(w),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..l).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), l),
            any::<prop::sample::Index>(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn independent_of_order((which, perm, order, flips, k) in shuffled_views()) {
        let net = &scenarios()[which];
        let want = contract(net).unwrap();
        let shuffled = relabel(net, &perm, &order, &flips);
        prop_assert_eq!(contract(&shuffled).unwrap(), want.clone());
        let k = k.index(shuffled.links.len());
        prop_assert_eq!(contract(&insert_transparent(&shuffled, k).unwrap()).unwrap(), want);
    }
}

#[test]
fn json_round_trip_keeps_value() {
    for net in scenarios() {
        let back = PantsNetwork::from_json(&net.to_json()).unwrap();
        assert_eq!(contract(&back).unwrap(), contract(&net).unwrap());
    }
}

#[test]
fn empty_network_rejected() {
    assert!(contract(&PantsNetwork::new(vec![AnyonTheory::dz(2)])).is_err());
}
