use crate::AsymptoticError;
use serde::{Deserialize, Serialize};
use std::sync::Mutex;
use subshift_core::{Letter, Substitution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

/// A one-sided sequence fixed by `tau^p`, grown on demand from a seed
/// letter: rightward `lim tau^{pn}(a a ...)`, leftward `lim tau^{pn}(... a a)`.
///
/// Rightward requires the first-letter map of `tau^p` to fix `a`; leftward
/// the last-letter map. `tau^p` is never materialized: a length-`m` prefix
/// of `tau(u)` is determined by a length-`m` prefix of `u` (images are
/// nonempty), so expansion applies `tau` stepwise and truncates in between.
/// That keeps group substitutions with large `p` (rule length `q^p`)
/// tractable.
pub struct OneSidedFixedPoint {
    base: Substitution,
    power: u32,
    seed: Letter,
    direction: Direction,
    memo: Mutex<Vec<Letter>>,
}

impl OneSidedFixedPoint {
    pub fn new(
        base: Substitution,
        power: u32,
        seed: Letter,
        direction: Direction,
    ) -> Result<Self, AsymptoticError> {
        if power == 0 {
            return Err(AsymptoticError::Precondition("power must be >= 1".into()));
        }
        let step = |letter: Letter| -> Letter {
            let image = base.image(letter);
            match direction {
                Direction::Right => image[0],
                Direction::Left => *image.last().unwrap(),
            }
        };
        let mut edge = seed;
        for _ in 0..power {
            edge = step(edge);
        }
        if edge != seed {
            return Err(AsymptoticError::Precondition(format!(
                "the {direction:?} edge-letter map of tau^{power} does not fix seed {seed}"
            )));
        }
        Ok(OneSidedFixedPoint { base, power, seed, direction, memo: Mutex::new(vec![seed]) })
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    fn truncated_step(&self, w: &[Letter], m: usize) -> Vec<Letter> {
        // One application of tau^power with truncation to m after every
        // single-tau step.
        let mut cur = w.to_vec();
        for _ in 0..self.power {
            let grown = self.base.apply(&cur);
            cur = match self.direction {
                Direction::Right => {
                    let take = grown.len().min(m);
                    grown[..take].to_vec()
                }
                Direction::Left => {
                    let skip = grown.len().saturating_sub(m);
                    grown[skip..].to_vec()
                }
            };
        }
        cur
    }

    /// The first (rightward) or last (leftward) `m` letters, in reading
    /// order.
    pub fn expand(&self, m: usize) -> Vec<Letter> {
        let m = m.max(1);
        let mut memo = self.memo.lock().unwrap();
        if memo.len() < m {
            let mut w = vec![self.seed];
            let guard = 64 + 4 * m * (self.power as usize + 1);
            let mut iterations = 0;
            while w.len() < m {
                w = self.truncated_step(&w, m);
                iterations += 1;
                assert!(iterations <= guard, "tail expansion failed to grow");
            }
            *memo = w;
        }
        match self.direction {
            Direction::Right => memo[..m].to_vec(),
            Direction::Left => memo[memo.len() - m..].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thue_morse_right_tails() {
        // p = 2: tau^2(0) = 0110 starts with 0, tau^2(1) = 1001 with 1.
        let tm = Substitution::thue_morse();
        let z0 = OneSidedFixedPoint::new(tm.clone(), 2, 0, Direction::Right).unwrap();
        let z1 = OneSidedFixedPoint::new(tm, 2, 1, Direction::Right).unwrap();
        assert_eq!(z0.expand(8), vec![0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(z1.expand(8), vec![1, 0, 0, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn expansion_is_fixed_point() {
        let tm = Substitution::thue_morse();
        let tm2 = tm.compose(2);
        let z0 = OneSidedFixedPoint::new(tm, 2, 0, Direction::Right).unwrap();
        for m in [5, 17, 33] {
            let w = z0.expand(m);
            let image = tm2.apply(&w);
            assert_eq!(&image[..m], &w[..], "tau^p fixes the expansion");
        }
    }

    #[test]
    fn expansion_prefix_property() {
        let z =
            OneSidedFixedPoint::new(Substitution::thue_morse(), 2, 0, Direction::Right).unwrap();
        let a = z.expand(10);
        let b = z.expand(11);
        assert_eq!(&b[..10], &a[..]);
    }

    #[test]
    fn left_tail_of_nonminimal() {
        // tau(0) = 010 ends with 0: leftward fixed point ends ...11010.
        let s = Substitution::nonminimal_010_11();
        let lambda = OneSidedFixedPoint::new(s, 1, 0, Direction::Left).unwrap();
        let tail = lambda.expand(5);
        assert_eq!(tail, vec![1, 1, 0, 1, 0]);
        let longer = lambda.expand(9);
        assert_eq!(&longer[4..], &tail[..]);
    }

    #[test]
    fn rejects_unanchored_seed() {
        // Thue-Morse: the last-letter map swaps, so p = 1 leftward fails.
        let tm = Substitution::thue_morse();
        assert!(OneSidedFixedPoint::new(tm, 1, 0, Direction::Left).is_err());
    }
}
