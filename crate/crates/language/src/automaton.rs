/// Generalized suffix automaton over byte-letter strings.
///
/// Recognizes exactly the set of substrings of the inserted strings; the
/// per-length distinct-substring counts come out in one pass over states.
pub struct SuffixAutomaton {
    alpha: usize,
    len: Vec<u32>,
    link: Vec<i32>,
    trans: Vec<u32>, // states x alpha, u32::MAX = none
}

const NONE: u32 = u32::MAX;

impl SuffixAutomaton {
    pub fn new(alpha: usize) -> Self {
        SuffixAutomaton { alpha, len: vec![0], link: vec![-1], trans: vec![NONE; alpha] }
    }

    fn add_state(&mut self, len: u32, link: i32) -> u32 {
        self.len.push(len);
        self.link.push(link);
        self.trans.extend(std::iter::repeat(NONE).take(self.alpha));
        (self.len.len() - 1) as u32
    }

    #[inline]
    fn tr(&self, state: u32, c: u8) -> u32 {
        self.trans[state as usize * self.alpha + c as usize]
    }

    #[inline]
    fn set_tr(&mut self, state: u32, c: u8, to: u32) {
        self.trans[state as usize * self.alpha + c as usize] = to;
    }

    pub fn insert(&mut self, s: &[u8]) {
        let mut last = 0u32;
        for &c in s {
            last = self.extend(last, c);
        }
    }

    fn extend(&mut self, last: u32, c: u8) -> u32 {
        let existing = self.tr(last, c);
        if existing != NONE {
            let q = existing;
            if self.len[q as usize] == self.len[last as usize] + 1 {
                return q;
            }
            // Clone q for the shorter context.
            let clone = self.add_state(self.len[last as usize] + 1, self.link[q as usize]);
            for ch in 0..self.alpha as u8 {
                let t = self.tr(q, ch);
                self.set_tr(clone, ch, t);
            }
            self.link[q as usize] = clone as i32;
            let mut p = last as i32;
            while p >= 0 && self.tr(p as u32, c) == q {
                self.set_tr(p as u32, c, clone);
                p = self.link[p as usize];
            }
            return clone;
        }
        let cur = self.add_state(self.len[last as usize] + 1, -1);
        let mut p = last as i32;
        while p >= 0 && self.tr(p as u32, c) == NONE {
            self.set_tr(p as u32, c, cur);
            p = self.link[p as usize];
        }
        if p < 0 {
            self.link[cur as usize] = 0;
        } else {
            let q = self.tr(p as u32, c);
            if self.len[q as usize] == self.len[p as usize] + 1 {
                self.link[cur as usize] = q as i32;
            } else {
                let clone = self.add_state(self.len[p as usize] + 1, self.link[q as usize]);
                for ch in 0..self.alpha as u8 {
                    let t = self.tr(q, ch);
                    self.set_tr(clone, ch, t);
                }
                self.link[q as usize] = clone as i32;
                let mut pp = p;
                while pp >= 0 && self.tr(pp as u32, c) == q {
                    self.set_tr(pp as u32, c, clone);
                    pp = self.link[pp as usize];
                }
                self.link[cur as usize] = clone as i32;
            }
        }
        cur
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        let mut state = 0u32;
        for &c in w {
            state = self.tr(state, c);
            if state == NONE {
                return false;
            }
        }
        true
    }

    /// `out[m]` = number of distinct substrings of length `m`, for
    /// `m <= max_len`. `out[0]` is 1 by convention (the empty word).
    pub fn distinct_counts(&self, max_len: usize) -> Vec<u64> {
        let mut diff = vec![0i64; max_len + 2];
        for v in 1..self.len.len() {
            let hi = self.len[v] as usize;
            let lo = self.len[self.link[v] as usize] as usize + 1;
            if lo > max_len {
                continue;
            }
            let hi = hi.min(max_len);
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        let mut out = vec![0u64; max_len + 1];
        out[0] = 1;
        let mut acc = 0i64;
        for m in 1..=max_len {
            acc += diff[m];
            out[m] = acc as u64;
        }
        out
    }

    pub fn states(&self) -> usize {
        self.len.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn brute_counts(texts: &[&[u8]], max_len: usize) -> Vec<u64> {
        let mut out = vec![0u64; max_len + 1];
        out[0] = 1;
        for m in 1..=max_len {
            let mut set = BTreeSet::new();
            for t in texts {
                for w in t.windows(m) {
                    set.insert(w.to_vec());
                }
            }
            out[m] = set.len() as u64;
        }
        out
    }

    #[test]
    fn counts_match_brute_force_single() {
        let t: Vec<u8> = b"abacabadabacaba".iter().map(|c| c - b'a').collect();
        let mut sa = SuffixAutomaton::new(4);
        sa.insert(&t);
        assert_eq!(sa.distinct_counts(8), brute_counts(&[&t], 8));
        assert!(sa.contains(&[0, 1, 0]));
        assert!(!sa.contains(&[1, 1]));
    }

    #[test]
    fn counts_match_brute_force_multi() {
        let a: Vec<u8> = vec![0, 1, 1, 0, 1, 0, 0, 1];
        let b: Vec<u8> = vec![1, 0, 0, 1, 1, 1, 0];
        let c: Vec<u8> = vec![0, 0, 0];
        let mut sa = SuffixAutomaton::new(2);
        for t in [&a, &b, &c] {
            sa.insert(t);
        }
        assert_eq!(sa.distinct_counts(7), brute_counts(&[&a, &b, &c], 7));
    }

    #[test]
    fn random_multi_agrees() {
        // Deterministic xorshift; no external rng needed.
        let mut x = 0x243f6a8885a308d3u64;
        let mut next = move || {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            x
        };
        for round in 0..30 {
            let alpha = 2 + (round % 3) as u8;
            let texts: Vec<Vec<u8>> = (0..3)
                .map(|_| {
                    let len = 1 + (next() % 40) as usize;
                    (0..len).map(|_| (next() % alpha as u64) as u8).collect()
                })
                .collect();
            let refs: Vec<&[u8]> = texts.iter().map(|t| t.as_slice()).collect();
            let mut sa = SuffixAutomaton::new(alpha as usize);
            for t in &refs {
                sa.insert(t);
            }
            assert_eq!(sa.distinct_counts(12), brute_counts(&refs, 12));
        }
    }
}
