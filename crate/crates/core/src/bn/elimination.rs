//! Variable elimination with a greedy min-fill ordering.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{BayesNet, Evidence, MarginalSet};
use crate::{Error, Result};

/// Largest intermediate factor the elimination will build.
const MAX_FACTOR_ENTRIES: u128 = 1 << 26;

/// A table over `vars` (ascending node indices), last variable fastest.
#[derive(Debug, Clone)]
struct Factor {
    vars: Vec<usize>,
    cards: Vec<usize>,
    values: Vec<f64>,
}

impl Factor {
    fn scalar(value: f64) -> Self {
        Factor { vars: Vec::new(), cards: Vec::new(), values: alloc::vec![value] }
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = alloc::vec![1; self.vars.len()];
        for k in (0..self.vars.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.cards[k + 1];
        }
        s
    }

    /// CPT of `node` with evidence variables instantiated away.
    fn from_cpt(net: &BayesNet, node: usize, evidence: &Evidence) -> Self {
        let mut scope: Vec<usize> = net.node(node).parents().to_vec();
        scope.push(node);
        scope.sort_unstable();
        let vars: Vec<usize> = scope.iter().copied().filter(|&v| !evidence.contains(v)).collect();
        let cards: Vec<usize> = vars.iter().map(|&v| net.node(v).cardinality()).collect();
        let size: usize = cards.iter().product();
        let mut assignment: Vec<usize> = (0..net.len()).map(|i| evidence.get(i).unwrap_or(0)).collect();
        let mut values = Vec::with_capacity(size);
        for flat in 0..size {
            let mut rest = flat;
            for k in (0..vars.len()).rev() {
                assignment[vars[k]] = rest % cards[k];
                rest /= cards[k];
            }
            let row = net.parent_config(node, &assignment);
            values.push(net.node(node).row(row)[assignment[node]]);
        }
        Factor { vars, cards, values }
    }

    fn product(&self, other: &Factor) -> Result<Factor> {
        let mut vars: Vec<usize> = self.vars.iter().chain(&other.vars).copied().collect();
        vars.sort_unstable();
        vars.dedup();
        let card_of = |v: usize| {
            self.vars
                .iter()
                .position(|&x| x == v)
                .map(|k| self.cards[k])
                .unwrap_or_else(|| other.cards[other.vars.iter().position(|&x| x == v).unwrap()])
        };
        let cards: Vec<usize> = vars.iter().map(|&v| card_of(v)).collect();
        let size = cards.iter().map(|&c| c as u128).product::<u128>();
        if size > MAX_FACTOR_ENTRIES {
            return Err(Error::TooLarge { configurations: size, limit: MAX_FACTOR_ENTRIES });
        }
        let map = |f: &Factor| -> Vec<usize> {
            let fs = f.strides();
            vars.iter()
                .map(|v| f.vars.iter().position(|x| x == v).map_or(0, |k| fs[k]))
                .collect()
        };
        let (sa, sb) = (map(self), map(other));
        let mut digits = alloc::vec![0usize; vars.len()];
        let (mut ia, mut ib) = (0usize, 0usize);
        let mut values = Vec::with_capacity(size as usize);
        for _ in 0..size {
            values.push(self.values[ia] * other.values[ib]);
            for k in (0..vars.len()).rev() {
                digits[k] += 1;
                ia += sa[k];
                ib += sb[k];
                if digits[k] < cards[k] {
                    break;
                }
                ia -= sa[k] * cards[k];
                ib -= sb[k] * cards[k];
                digits[k] = 0;
            }
        }
        Ok(Factor { vars, cards, values })
    }

    fn sum_out(&self, var: usize) -> Factor {
        let k = self.vars.iter().position(|&v| v == var).expect("variable in scope");
        let inner: usize = self.cards[k + 1..].iter().product();
        let card = self.cards[k];
        let outer = self.values.len() / (inner * card);
        let mut values = alloc::vec![0.0; outer * inner];
        for o in 0..outer {
            for c in 0..card {
                let base = (o * card + c) * inner;
                for i in 0..inner {
                    values[o * inner + i] += self.values[base + i];
                }
            }
        }
        let mut vars = self.vars.clone();
        let mut cards = self.cards.clone();
        vars.remove(k);
        cards.remove(k);
        Factor { vars, cards, values }
    }
}

/// Greedy min-fill order over `targets`; ties go to the lowest node index.
fn min_fill_order(factors: &[Factor], n: usize, targets: &BTreeSet<usize>) -> Vec<usize> {
    let mut adj: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); n];
    for f in factors {
        for &a in &f.vars {
            for &b in &f.vars {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    let mut remaining = targets.clone();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<(usize, usize)> = None;
        for &v in &remaining {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(&b) {
                        fill += 1;
                    }
                }
            }
            if best.is_none_or(|(f, _)| fill < f) {
                best = Some((fill, v));
            }
        }
        let (_, v) = best.expect("non-empty");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
        remaining.remove(&v);
        order.push(v);
    }
    order
}

/// Eliminates every free variable except `keep`; returns the remaining factor.
fn eliminate(base: &[Factor], n: usize, free: &[usize], keep: Option<usize>) -> Result<Factor> {
    let targets: BTreeSet<usize> = free.iter().copied().filter(|&v| Some(v) != keep).collect();
    let order = min_fill_order(base, n, &targets);
    let mut factors: Vec<Factor> = base.to_vec();
    for v in order {
        let (with, without): (Vec<Factor>, Vec<Factor>) =
            factors.into_iter().partition(|f| f.vars.contains(&v));
        factors = without;
        let mut acc = Factor::scalar(1.0);
        for f in &with {
            acc = acc.product(f)?;
        }
        factors.push(acc.sum_out(v));
    }
    let mut acc = Factor::scalar(1.0);
    for f in &factors {
        acc = acc.product(f)?;
    }
    Ok(acc)
}

/// Exact posterior marginals and `Pr(E = e)` by variable elimination, one
/// elimination pass per non-evidence node.
pub fn variable_elimination(net: &BayesNet, evidence: &Evidence) -> Result<MarginalSet> {
    evidence.check(net)?;
    let n = net.len();
    let base: Vec<Factor> = (0..n).map(|i| Factor::from_cpt(net, i, evidence)).collect();
    let free: Vec<usize> = (0..n).filter(|&i| !evidence.contains(i)).collect();

    let mut unnormalized: Vec<Option<Vec<f64>>> = alloc::vec![None; n];
    let mut prob_evidence = None;
    for &q in &free {
        let f = eliminate(&base, n, &free, Some(q))?;
        debug_assert_eq!(f.vars, [q]);
        prob_evidence.get_or_insert(f.values.iter().sum::<f64>());
        unnormalized[q] = Some(f.values);
    }
    let pe = match prob_evidence {
        Some(p) => p,
        None => eliminate(&base, n, &free, None)?.values[0],
    };
    if pe <= 0.0 {
        return Err(Error::ImpossibleEvidence);
    }
    let per_node = (0..n)
        .map(|i| match (&unnormalized[i], evidence.get(i)) {
            (Some(v), _) => {
                let z: f64 = v.iter().sum();
                v.iter().map(|x| x / z).collect()
            }
            (None, Some(s)) => {
                let mut ind = alloc::vec![0.0; net.node(i).cardinality()];
                ind[s] = 1.0;
                ind
            }
            (None, None) => unreachable!("every node is free or observed"),
        })
        .collect();
    Ok(MarginalSet::new(per_node, Some(pe)))
}
