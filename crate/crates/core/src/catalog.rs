//! Standard semigroup families, exhaustive enumeration of labeled
//! semigroups of small order, and seeded random generation.
//!
//! Transformations compose right to left: the product `f·g` is `f∘g`,
//! `(f∘g)(t) = f(g(t))`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::semigroup::Semigroup;

/// Largest order accepted by [`enumerate_all_semigroups`].
pub const MAX_ENUMERATION_ORDER: usize = 4;
/// Element cap for generated transformation semigroups.
pub const CLOSURE_CAP: usize = 256;

fn require(cond: bool, what: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(what.into()))
    }
}

/// `x·y = x`.
pub fn left_zero(n: usize) -> Result<Semigroup> {
    require(n >= 1, "left_zero needs n >= 1")?;
    Semigroup::from_fn(n, |x, _| x)
}

/// `x·y = y`.
pub fn right_zero(n: usize) -> Result<Semigroup> {
    require(n >= 1, "right_zero needs n >= 1")?;
    Semigroup::from_fn(n, |_, y| y)
}

/// Every product is element 0.
pub fn null_semigroup(n: usize) -> Result<Semigroup> {
    require(n >= 1, "null_semigroup needs n >= 1")?;
    Semigroup::from_fn(n, |_, _| 0)
}

/// `ℤ_n` under addition; element 0 is the identity.
pub fn cyclic_group(n: usize) -> Result<Semigroup> {
    require(n >= 1, "cyclic_group needs n >= 1")?;
    Semigroup::from_fn(n, |x, y| (x + y) % n)
}

/// `{0 < 1 < … < n-1}` under `min`. `chain_semilattice(2)` is the
/// two-element semilattice `{0,1}` under multiplication.
pub fn chain_semilattice(n: usize) -> Result<Semigroup> {
    require(n >= 1, "chain_semilattice needs n >= 1")?;
    Semigroup::from_fn(n, usize::min)
}

/// `I×J` with `(i,j)(k,l) = (i,l)`; element `(i,j)` has index `i·q + j`.
pub fn rectangular_band(p: usize, q: usize) -> Result<Semigroup> {
    require(p >= 1 && q >= 1, "rectangular_band needs p, q >= 1")?;
    Semigroup::from_fn(p * q, |x, y| (x / q) * q + y % q)
}

/// `⟨a | a^(index+period) = a^index⟩`; element `t` is `a^(t+1)`.
pub fn monogenic(index: usize, period: usize) -> Result<Semigroup> {
    require(index >= 1 && period >= 1, "monogenic needs index, period >= 1")?;
    let n = index + period - 1;
    let reduce = |e: usize| if e <= n { e } else { index + (e - index) % period };
    Semigroup::from_fn(n, |x, y| reduce(x + 1 + y + 1) - 1)
}

/// All self-maps of `{0..k}`; map `f` has index `Σ f(t)·k^t`.
pub fn full_transformation_monoid(k: usize) -> Result<Semigroup> {
    require((1..=4).contains(&k), "full_transformation_monoid needs 1 <= k <= 4")?;
    let n = k.pow(k as u32);
    let decode = |mut code: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = code % k;
                code /= k;
                d
            })
            .collect()
    };
    let maps: Vec<Vec<usize>> = (0..n).map(decode).collect();
    Semigroup::from_fn(n, |f, g| {
        (0..k).rev().fold(0, |acc, t| acc * k + maps[f][maps[g][t]])
    })
}

/// `(s,t)(s',t') = (ss', tt')`; pair `(s,t)` has index `s·|T| + t`.
pub fn direct_product(s: &Semigroup, t: &Semigroup) -> Semigroup {
    let m = t.order();
    let n = s.order() * m;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(s.mul(x / m, y / m) * m + t.mul(x % m, y % m));
        }
    }
    Semigroup::from_table_unchecked(n, table)
}

/// Adjoins a new zero at index `s.order()`.
pub fn adjoin_zero(s: &Semigroup) -> Semigroup {
    let n = s.order();
    let z = n;
    let mut table = Vec::with_capacity((n + 1) * (n + 1));
    for x in 0..=n {
        for y in 0..=n {
            table.push(if x == z || y == z { z } else { s.mul(x, y) });
        }
    }
    Semigroup::from_table_unchecked(n + 1, table)
}

/// `ℤ_n ∪ {0}`: the group occupies `0..n` and the zero is index `n`.
pub fn group_with_zero(n: usize) -> Result<Semigroup> {
    Ok(adjoin_zero(&cyclic_group(n)?))
}

/// The subsemigroup of the transformations of `{0..k}` generated by
/// `generators`, as an abstract table. Elements are numbered in discovery
/// order, generators first.
pub fn transformation_semigroup(k: usize, generators: &[Vec<usize>]) -> Result<Semigroup> {
    require(k >= 1, "transformation_semigroup needs k >= 1")?;
    require(!generators.is_empty(), "at least one generator is required")?;
    for g in generators {
        require(
            g.len() == k && g.iter().all(|&v| v < k),
            "generator is not a self-map of the k-set",
        )?;
    }
    let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { (0..k).map(|t| f[g[t]]).collect() };
    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut next = 0;
    while next < elements.len() {
        for g in generators {
            let h = compose(&elements[next], g);
            if !index.contains_key(&h) {
                if elements.len() == CLOSURE_CAP {
                    return Err(Error::ClosureTooLarge(CLOSURE_CAP));
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
        next += 1;
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &elements {
        for g in &elements {
            table.push(index[&compose(f, g)]);
        }
    }
    Ok(Semigroup::from_table_unchecked(n, table))
}

/// Closure of `generators` random self-maps of a `k`-set; deterministic per seed.
pub fn random_transformation_subsemigroup(k: usize, generators: usize, seed: u64) -> Result<Semigroup> {
    require((1..=8).contains(&k), "random_transformation_subsemigroup needs 1 <= k <= 8")?;
    require(generators >= 1, "at least one generator is required")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Vec<usize>> = (0..generators)
        .map(|_| (0..k).map(|_| rng.gen_range(0..k)).collect())
        .collect();
    transformation_semigroup(k, &gens)
}

/// The symmetric group on `k` points, generated by a transposition and a `k`-cycle.
pub fn symmetric_group(k: usize) -> Result<Semigroup> {
    require((1..=5).contains(&k), "symmetric_group needs 1 <= k <= 5")?;
    let cycle: Vec<usize> = (0..k).map(|t| (t + 1) % k).collect();
    let mut swap: Vec<usize> = (0..k).collect();
    if k >= 2 {
        swap.swap(0, 1);
    }
    transformation_semigroup(k, &[swap, cycle])
}

/// Every labeled semigroup on `n` elements, in lexicographic order of the
/// row-major table.
pub fn enumerate_all_semigroups(n: usize) -> Result<Vec<Semigroup>> {
    enumerate_all_semigroups_with(n, Exec::Sequential)
}

/// Same as [`enumerate_all_semigroups`], sharding the search tree by the
/// assignment of the first row. The output order does not depend on `exec`.
pub fn enumerate_all_semigroups_with(n: usize, exec: Exec) -> Result<Vec<Semigroup>> {
    if n == 0 {
        return Err(Error::EmptySemigroup);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let shards = n.pow(n as u32);
    let parts = exec.map_range(0..shards, |shard| {
        let mut bt = Backtracker::new(n);
        let mut code = shard;
        for j in (0..n).rev() {
            bt.cells[j] = code % n;
            code /= n;
        }
        let mut out = Vec::new();
        if bt.consistent() {
            bt.search(n, &mut out);
        }
        out
    });
    Ok(parts.into_iter().flatten().collect())
}

const UNSET: usize = usize::MAX;

struct Backtracker {
    n: usize,
    cells: Vec<usize>,
}

impl Backtracker {
    fn new(n: usize) -> Self {
        Backtracker {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    /// Checks every associativity triple whose four cells are all assigned.
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let l = self.get(xy, z);
                    let r = self.get(x, yz);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, pos: usize, out: &mut Vec<Semigroup>) {
        let n = self.n;
        if pos == n * n {
            out.push(Semigroup::from_table_unchecked(n, self.cells.clone()));
            return;
        }
        for v in 0..n {
            self.cells[pos] = v;
            if self.consistent() {
                self.search(pos + 1, out);
            }
        }
        self.cells[pos] = UNSET;
    }
}

/// A seeded mixed corpus of semigroups of order at most `max_order`: the
/// families above with random parameters, their direct products, adjoined
/// zeros and random transformation semigroups.
pub fn random_corpus(seed: u64, count: usize, max_order: usize) -> Vec<Semigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(s) = random_member(&mut rng, max_order) {
            if s.order() <= max_order {
                out.push(s);
            }
        }
    }
    out
}

fn random_member(rng: &mut ChaCha8Rng, max_order: usize) -> Option<Semigroup> {
    // parameters are drawn so that most candidates fit in `max_order`
    let m = max_order.max(1);
    let small = |rng: &mut ChaCha8Rng| rng.gen_range(1..=m.min(6));
    let s = match rng.gen_range(0..12) {
        0 => left_zero(small(rng)).ok()?,
        1 => right_zero(small(rng)).ok()?,
        2 => null_semigroup(small(rng)).ok()?,
        3 => cyclic_group(small(rng)).ok()?,
        4 => chain_semilattice(small(rng)).ok()?,
        5 => {
            let p = rng.gen_range(1..=m.min(3));
            rectangular_band(p, rng.gen_range(1..=(m / p).min(3))).ok()?
        }
        6 => {
            let index = rng.gen_range(1..=m.min(4));
            monogenic(index, rng.gen_range(1..=(m + 1 - index).min(4))).ok()?
        }
        7 if m >= 2 => group_with_zero(rng.gen_range(1..=(m - 1).min(5))).ok()?,
        8 if m >= 2 => {
            let a = random_member(rng, m / 2)?;
            let b = random_member(rng, m / a.order())?;
            direct_product(&a, &b)
        }
        9 if m >= 2 => adjoin_zero(&random_member(rng, m - 1)?),
        7..=9 => null_semigroup(1).ok()?,
        _ => {
            let k_max = if m >= 27 { 4 } else if m >= 4 { 3 } else { 2 };
            let k = rng.gen_range(2..=k_max);
            let g = rng.gen_range(1..=3);
            let seed = rng.gen();
            random_transformation_subsemigroup(k, g, seed).ok()?
        }
    };
    Some(s)
}
