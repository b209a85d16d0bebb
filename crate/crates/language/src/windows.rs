//! Exact distinct-window counting for long texts.
//!
//! Positions are grouped by a double polynomial hash and every hash group is
//! verified by byte comparison, so counts are exact regardless of
//! collisions.

const MOD: u64 = (1 << 61) - 1;
const BASE1: u64 = 0x9e3779b97f4a7c15 % MOD;
const BASE2: u64 = 0x6a09e667f3bcc909 % MOD;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

struct Hasher {
    prefix1: Vec<u64>,
    prefix2: Vec<u64>,
    pow1: u64,
    pow2: u64,
    len: usize,
}

impl Hasher {
    fn new(text: &[u8], len: usize) -> Self {
        let mut prefix1 = Vec::with_capacity(text.len() + 1);
        let mut prefix2 = Vec::with_capacity(text.len() + 1);
        prefix1.push(0);
        prefix2.push(0);
        let (mut h1, mut h2) = (0u64, 0u64);
        for &c in text {
            h1 = add_mod(mul_mod(h1, BASE1), c as u64 + 1);
            h2 = add_mod(mul_mod(h2, BASE2), c as u64 + 1);
            prefix1.push(h1);
            prefix2.push(h2);
        }
        let mut pow1 = 1u64;
        let mut pow2 = 1u64;
        for _ in 0..len {
            pow1 = mul_mod(pow1, BASE1);
            pow2 = mul_mod(pow2, BASE2);
        }
        Hasher { prefix1, prefix2, pow1, pow2, len }
    }

    #[inline]
    fn window(&self, start: usize) -> (u64, u64) {
        let end = start + self.len;
        let h1 = sub_mul(self.prefix1[end], self.prefix1[start], self.pow1);
        let h2 = sub_mul(self.prefix2[end], self.prefix2[start], self.pow2);
        (h1, h2)
    }
}

#[inline]
fn sub_mul(hi: u64, lo: u64, pow: u64) -> u64 {
    let x = mul_mod(lo, pow);
    if hi >= x {
        hi - x
    } else {
        hi + MOD - x
    }
}

/// Exact number of distinct length-`len` windows across `texts`.
///
/// Short windows go through hash-group-and-verify; long windows through a
/// suffix automaton, whose cost does not scale with the window length.
pub fn count_distinct_windows(texts: &[&[u8]], len: usize) -> u64 {
    if len == 0 {
        return 1;
    }
    if len >= 64 {
        let alpha = texts
            .iter()
            .flat_map(|t| t.iter())
            .map(|&c| c as usize + 1)
            .max()
            .unwrap_or(1);
        let mut sa = crate::automaton::SuffixAutomaton::new(alpha);
        for t in texts {
            sa.insert(t);
        }
        return sa.distinct_counts(len)[len];
    }
    count_distinct_capped(texts, len, u64::MAX).0
}

/// Counts distinct windows but may stop early once `target` distinct windows
/// have been seen. Returns `(count, exact)`: when `exact` is false the count
/// is a lower bound that already reached `target`.
///
/// Incremental (memory proportional to the windows seen, not the text), so
/// it is the right tool for long texts with a small target.
pub fn count_distinct_at_least(texts: &[&[u8]], len: usize, target: u64) -> (u64, bool) {
    if len == 0 {
        return (1, true);
    }
    use std::collections::HashMap;
    // hash pair -> positions of pairwise-distinct representatives
    let mut seen: HashMap<(u64, u64), Vec<(u32, u32)>> = HashMap::new();
    let mut count = 0u64;
    for (ti, text) in texts.iter().enumerate() {
        if text.len() < len {
            continue;
        }
        let h = Hasher::new(text, len);
        for start in 0..=(text.len() - len) {
            let key = h.window(start);
            let reps = seen.entry(key).or_default();
            let w = &text[start..start + len];
            let fresh = reps
                .iter()
                .all(|&(rt, rp)| texts[rt as usize][rp as usize..rp as usize + len] != *w);
            if fresh {
                reps.push((ti as u32, start as u32));
                count += 1;
                if count >= target {
                    let exhausted =
                        ti + 1 == texts.len() && start == text.len() - len;
                    return (count, exhausted);
                }
            }
        }
    }
    (count, true)
}

fn count_distinct_capped(texts: &[&[u8]], len: usize, target: u64) -> (u64, bool) {
    if len == 0 {
        return (1, true);
    }
    // (hash1, hash2, text idx, pos)
    let mut keys: Vec<(u64, u64, u32, u32)> = Vec::new();
    for (ti, text) in texts.iter().enumerate() {
        if text.len() < len {
            continue;
        }
        let h = Hasher::new(text, len);
        for start in 0..=(text.len() - len) {
            let (h1, h2) = h.window(start);
            keys.push((h1, h2, ti as u32, start as u32));
        }
    }
    keys.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let mut count = 0u64;
    let mut i = 0;
    while i < keys.len() {
        let mut j = i + 1;
        while j < keys.len() && keys[j].0 == keys[i].0 && keys[j].1 == keys[i].1 {
            j += 1;
        }
        // Verify the group: distinct byte contents within one hash class.
        if j - i == 1 {
            count += 1;
        } else {
            let mut reps: Vec<&[u8]> = Vec::new();
            for k in i..j {
                let (_, _, ti, pos) = keys[k];
                let w = &texts[ti as usize][pos as usize..pos as usize + len];
                if !reps.iter().any(|r| *r == w) {
                    reps.push(w);
                }
            }
            count += reps.len() as u64;
        }
        if count >= target {
            return (count, j >= keys.len());
        }
        i = j;
    }
    (count, true)
}
