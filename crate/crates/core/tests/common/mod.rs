#![allow(dead_code)]

use inclust_core::{Instance, Symbol, TriVector, Variant};

pub fn rows(s: &[&str]) -> Vec<TriVector> {
    s.iter().map(|x| TriVector::parse(x).unwrap()).collect()
}

/// Plain Hamming distance on complete vectors, bit by bit.
pub fn plain_distance(a: &TriVector, b: &TriVector) -> usize {
    (0..a.dim()).filter(|&i| a.get(i) != b.get(i)).count()
}

/// All completions, the first MISSING cell varying slowest.
pub fn all_completions(rows: &[TriVector]) -> Vec<Vec<TriVector>> {
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, v)| v.missing_coords().into_iter().map(move |j| (i, j)))
        .collect();
    (0..1u64 << cells.len())
        .map(|mask| {
            let mut out = rows.to_vec();
            for (slot, &(i, j)) in cells.iter().enumerate() {
                let bit = mask >> (cells.len() - 1 - slot) & 1 == 1;
                out[i].set(j, Symbol::from_bit(bit));
            }
            out
        })
        .collect()
}

/// Every partition of `0..n` into at most `k` blocks (restricted growth strings).
pub fn partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, k: usize, label: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut blocks = vec![Vec::new(); used];
            for (v, &b) in label.iter().enumerate() {
                blocks[b].push(v);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=used.min(k - 1) {
            if b == used && used == k {
                continue;
            }
            label.push(b);
            go(i + 1, n, k, label, used.max(b + 1), out);
            label.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), 0, &mut out);
    out
}

fn block_ok(rows: &[TriVector], block: &[usize], r: usize, variant: Variant) -> bool {
    match variant {
        Variant::In => block.iter().any(|&c| block.iter().all(|&v| plain_distance(&rows[c], &rows[v]) <= r)),
        Variant::Any => {
            let d = rows[0].dim();
            (0..1u64 << d).any(|bits| {
                let center = TriVector::from_bits(&(0..d).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
                block.iter().all(|&v| plain_distance(&center, &rows[v]) <= r)
            })
        }
        Variant::Diam => block
            .iter()
            .all(|&a| block.iter().all(|&b| plain_distance(&rows[a], &rows[b]) <= r)),
    }
}

/// Whether a complete matrix admits a valid partition, by exhaustion.
pub fn naive_complete(rows: &[TriVector], k: usize, r: usize, variant: Variant) -> bool {
    partitions(rows.len(), k)
        .iter()
        .any(|p| p.iter().all(|b| block_ok(rows, b, r, variant)))
}

/// Exhaustive answer over completions and partitions.
pub fn naive_answer(inst: &Instance) -> bool {
    all_completions(inst.rows())
        .iter()
        .any(|c| naive_complete(c, inst.k(), inst.r(), inst.variant()))
}

/// A center plus rows one or two flips away, with a few MISSING entries in
/// one column. Dense enough for the sunflower rules to fire at `k = 1`.
pub fn star_instance(seed: u64, variant: Variant, k: usize, r: usize, max_flips: usize) -> Instance {
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let d = rng.random_range(7..=10);
    let n = rng.random_range(8..=12);
    let center: Vec<bool> = (0..d).map(|_| rng.random_bool(0.5)).collect();
    let mut rows = vec![TriVector::from_bits(&center)];
    for _ in 1..n {
        let mut bits = center.clone();
        let flips = rng.random_range(1..=max_flips);
        for i in sample(&mut rng, d, flips) {
            bits[i] = !bits[i];
        }
        rows.push(TriVector::from_bits(&bits));
    }
    let col = rng.random_range(0..d);
    for _ in 0..rng.random_range(0..=3) {
        let i = rng.random_range(0..n);
        rows[i].set(col, Symbol::Missing);
    }
    Instance::new(rows, k, r, variant).unwrap()
}
