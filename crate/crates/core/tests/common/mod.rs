#![allow(dead_code)]

use qmcbn_core::bn::{BayesNet, Evidence, NodeSpec};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

pub fn below(rng: &mut SplitMix64, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn random_row(rng: &mut SplitMix64, k: usize) -> Vec<f64> {
    let mut row: Vec<f64> = (0..k).map(|_| if below(rng, 8) == 0 { 0.0 } else { unit(rng) + 0.01 }).collect();
    if row.iter().all(|&x| x == 0.0) {
        row[0] = 1.0;
    }
    let s: f64 = row.iter().sum();
    row.iter_mut().for_each(|x| *x /= s);
    row
}

/// Random DAG with up to `max_nodes` nodes, 2..=`max_states` states and up
/// to three parents per node, declared in shuffled order.
pub fn random_net(seed: u64, max_nodes: usize, max_states: usize) -> BayesNet {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let n = 1 + below(&mut rng, max_nodes);
    let cards: Vec<usize> = (0..n).map(|_| 2 + below(&mut rng, max_states - 1)).collect();
    let mut specs: Vec<NodeSpec> = (0..n)
        .map(|i| {
            let mut parents: Vec<usize> = (0..i).filter(|_| below(&mut rng, 3) == 0).collect();
            while parents.len() > 3 {
                parents.remove(below(&mut rng, parents.len()));
            }
            let rows: usize = parents.iter().map(|&p| cards[p]).product();
            NodeSpec {
                id: format!("n{i}"),
                states: (0..cards[i]).map(|s| format!("s{s}")).collect(),
                parents: parents.iter().map(|p| format!("n{p}")).collect(),
                cpt: (0..rows).map(|_| random_row(&mut rng, cards[i])).collect(),
            }
        })
        .collect();
    for i in (1..specs.len()).rev() {
        specs.swap(i, below(&mut rng, i + 1));
    }
    BayesNet::new(format!("random{seed}"), specs).unwrap()
}

/// Forward sample from the prior.
pub fn forward_sample(net: &BayesNet, rng: &mut SplitMix64) -> Vec<usize> {
    let mut a = vec![0; net.len()];
    for &i in net.topological_order() {
        let row = net.node(i).row(net.parent_config(i, &a));
        let u = unit(rng);
        let mut acc = 0.0;
        a[i] = row.len() - 1;
        for (s, &p) in row.iter().enumerate() {
            acc += p;
            if u < acc {
                a[i] = s;
                break;
            }
        }
        while row[a[i]] == 0.0 {
            a[i] -= 1;
        }
    }
    a
}

/// Evidence on a random subset, taken from a prior sample so that Pr(e) > 0.
pub fn random_evidence(net: &BayesNet, seed: u64) -> Evidence {
    let mut rng = SplitMix64::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let sample = forward_sample(net, &mut rng);
    let mut ev = Evidence::new();
    for i in 0..net.len() {
        if below(&mut rng, 3) == 0 && ev.len() + 1 < net.len() {
            ev.observe_index(net, i, sample[i]).unwrap();
        }
    }
    ev
}
