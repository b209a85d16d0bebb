use crate::MixedError;
use serde::{Deserialize, Serialize};
use subshift_core::{Alphabet, Letter, Substitution};
use subshift_language::windows::count_distinct_windows;

/// Images beyond this length are never materialized eagerly.
pub const EAGER_CAP: usize = 1 << 22;

/// Streams the first `len` symbols of the lexicographically least binary
/// De Bruijn cycle of order `k` (Lyndon-word concatenation), which starts
/// with `0^k`.
pub fn debruijn_prefix(k: usize, len: usize) -> Vec<Letter> {
    let mut seq = Vec::with_capacity(len.min(1 << 20));
    let mut a = vec![0u8; k + 1];
    // Standard recursive necklace generator with early abort once the
    // requested prefix is complete.
    fn db(t: usize, p: usize, k: usize, a: &mut Vec<u8>, seq: &mut Vec<Letter>, len: usize) {
        if seq.len() >= len {
            return;
        }
        if t > k {
            if k % p == 0 {
                for j in 1..=p {
                    seq.push(a[j]);
                    if seq.len() >= len {
                        return;
                    }
                }
            }
        } else {
            a[t] = a[t - p];
            db(t + 1, p, k, a, seq, len);
            for v in (a[t - p] + 1)..=1 {
                if seq.len() >= len {
                    return;
                }
                a[t] = v;
                db(t + 1, t, k, a, seq, len);
            }
        }
    }
    db(1, 1, k, &mut a, &mut seq, len);
    seq.truncate(len);
    seq
}

/// How full `k`-coverage of the images was certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverageCertificate {
    /// Every `2^k` window counted by a full scan.
    FullScan { distinct: u64 },
    /// Image too long to scan; certified by the De Bruijn cycle
    /// construction, with all windows of a scanned prefix verified
    /// pairwise distinct.
    Construction { prefix_scanned: usize, prefix_windows_distinct: bool },
}

/// A constant-length binary substitution whose images both start with 0 and
/// contain every binary word of length `k`: the linearized De Bruijn cycle
/// (cycle plus `k-1` wraparound symbols) with one distinguishing letter
/// appended.
///
/// For large `k` the images exist only as on-demand prefixes.
#[derive(Debug, Clone)]
pub struct DeBruijnImages {
    pub order: usize,
    /// Image length `2^k + k`.
    pub length: u128,
    eager: Option<Substitution>,
}

impl DeBruijnImages {
    /// The materialized substitution, when the image length is below the
    /// eager cap.
    pub fn substitution(&self) -> Option<&Substitution> {
        self.eager.as_ref()
    }

    /// First `len` letters of the image of `letter` (the images differ only
    /// in their final letter).
    pub fn image_prefix(&self, letter: Letter, len: usize) -> Vec<Letter> {
        if let Some(subst) = &self.eager {
            return subst.image(letter)[..len.min(subst.image(letter).len())].to_vec();
        }
        let len = (len as u128).min(self.length) as usize;
        let body = (self.length - 1) as usize;
        if len <= body {
            return linearized_prefix(self.order, len);
        }
        let mut out = linearized_prefix(self.order, body);
        out.push(letter);
        out
    }

    /// Certifies that the image of each letter contains exactly `2^k`
    /// distinct `k`-windows.
    pub fn coverage(&self, scan_cap: usize) -> CoverageCertificate {
        let k = self.order;
        if let (Some(subst), true) = (&self.eager, (self.length as usize) <= scan_cap) {
            // Both images share the covering body; scan image(0).
            let distinct = count_distinct_windows(&[subst.image(0)], k);
            CoverageCertificate::FullScan { distinct }
        } else {
            let scanned = scan_cap.min(1 << 20);
            let prefix = linearized_prefix(k, scanned);
            let windows = prefix.len().saturating_sub(k - 1) as u64;
            let distinct = count_distinct_windows(&[&prefix], k);
            CoverageCertificate::Construction {
                prefix_scanned: scanned,
                prefix_windows_distinct: distinct == windows,
            }
        }
    }

    /// True iff all four binary 2-words occur in an image prefix (needed by
    /// the window-count transfer argument).
    pub fn two_word_coverage_in_prefix(&self, scan: usize) -> bool {
        let prefix = self.image_prefix(0, scan);
        let mut seen = [false; 4];
        for w in prefix.windows(2) {
            seen[(w[0] * 2 + w[1]) as usize] = true;
        }
        seen.iter().all(|&b| b)
    }
}

/// Linearization: cycle followed by its first `k - 1` symbols, so every
/// cyclic window occurs linearly.
fn linearized_prefix(k: usize, len: usize) -> Vec<Letter> {
    let cycle_len = 1u128 << k;
    if (len as u128) <= cycle_len {
        return debruijn_prefix(k, len);
    }
    let mut out = debruijn_prefix(k, cycle_len as usize);
    let extra = len - cycle_len as usize;
    let head = debruijn_prefix(k, extra.min(k - 1));
    out.extend_from_slice(&head);
    out
}

/// Builds the order-`k` De Bruijn substitution: `image(b)` is the
/// linearized cycle with the letter `b` appended, so both images start with
/// `0^k`, both contain all `2^k` windows, and they differ in the last
/// letter.
pub fn debruijn_substitution(k: usize) -> Result<DeBruijnImages, MixedError> {
    if k == 0 {
        return Err(MixedError::BadPhi("De Bruijn order must be >= 1".into()));
    }
    let length = (1u128 << k) + k as u128;
    let eager = if length as usize <= EAGER_CAP && k < 63 {
        let body = linearized_prefix(k, (length - 1) as usize);
        let mut image0 = body.clone();
        image0.push(0);
        let mut image1 = body;
        image1.push(1);
        Some(
            Substitution::new(Alphabet::binary(), vec![image0, image1])
                .expect("valid De Bruijn substitution"),
        )
    } else {
        None
    };
    Ok(DeBruijnImages { order: k, length, eager })
}
