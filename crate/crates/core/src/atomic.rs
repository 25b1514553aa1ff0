//! Far-star comparison, the `G·^` product, and atomic weights of all-small games.

use std::fmt;

use crate::error::{Error, Result};
use crate::game::{Arena, GameId, Outcome};

/// Position of an all-small game relative to the far star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FarStarOrder {
    Greater,
    Less,
    Fuzzy,
}

impl fmt::Display for FarStarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FarStarOrder::Greater => "Greater",
            FarStarOrder::Less => "Less",
            FarStarOrder::Fuzzy => "Fuzzy",
        };
        f.write_str(s)
    }
}

impl Arena {
    /// Win flags `(left first, right first)` for `g + *heap`, searched directly
    /// on the pair so the sum is never canonicalised.
    fn heap_sum_wins(&mut self, g: GameId, heap: u32) -> (bool, bool) {
        if let Some(&w) = self.far_star_wins.get(&(g, heap)) {
            return w;
        }
        let mut left_first = (0..heap).any(|j| !self.heap_sum_wins(g, j).1);
        if !left_first {
            for k in 0..self.left_options(g).len() {
                let gl = self.left_options(g)[k];
                if !self.heap_sum_wins(gl, heap).1 {
                    left_first = true;
                    break;
                }
            }
        }
        let mut right_first = (0..heap).any(|j| !self.heap_sum_wins(g, j).0);
        if !right_first {
            for k in 0..self.right_options(g).len() {
                let gr = self.right_options(g)[k];
                if !self.heap_sum_wins(gr, heap).0 {
                    right_first = true;
                    break;
                }
            }
        }
        self.far_star_wins
            .insert((g, heap), (left_first, right_first));
        (left_first, right_first)
    }

    /// Outcome of `g + *heap`.
    pub fn outcome_with_heap(&mut self, g: GameId, heap: u32) -> Outcome {
        let (l, r) = self.heap_sum_wins(g, heap);
        Outcome::from_wins(l, r)
    }

    /// Outcome of `g` plus the far star, approximated by `g + *N` for
    /// `N = birthday(g) + 2` and cross-checked against `N + 1`.
    fn far_star_outcome(&mut self, g: GameId) -> Result<Outcome> {
        let small = self.birthday(g) + 2;
        let large = small + 1;
        let first = self.outcome_with_heap(g, small);
        let second = self.outcome_with_heap(g, large);
        if first != second {
            return Err(Error::UnstableProbe {
                game: self.format_value(g, false),
                small,
                large,
                first,
                second,
            });
        }
        Ok(first)
    }

    /// Compares an all-small game with the far star.
    pub fn far_star_compare(&mut self, g: GameId) -> Result<FarStarOrder> {
        if !self.is_all_small(g) {
            return Err(Error::NotAllSmall(self.format_value(g, false)));
        }
        match self.far_star_outcome(g)? {
            Outcome::L => Ok(FarStarOrder::Greater),
            Outcome::R => Ok(FarStarOrder::Less),
            Outcome::N => Ok(FarStarOrder::Fuzzy),
            Outcome::P => Err(Error::Inconsistent(format!(
                "{} plus the far star is a P-position",
                self.format_value(g, false)
            ))),
        }
    }

    /// Equality modulo the far star: `v* + ※ < g - h < ^* + ※`.
    pub fn far_star_equiv(&mut self, g: GameId, h: GameId) -> Result<bool> {
        let diff = self.subtract(g, h);
        let up_star = self.up_star();
        let down_star = self.down_star();
        let below_upper = self.subtract(up_star, diff);
        if self.far_star_outcome(below_upper)? != Outcome::L {
            return Ok(false);
        }
        let above_lower = self.subtract(diff, down_star);
        Ok(self.far_star_outcome(above_lower)? == Outcome::L)
    }

    /// The product `G·^`: repeated `^` for integers, otherwise
    /// `{ G^L·^ + ⇑* | G^R·^ + ⇓* }`.
    pub fn product_up(&mut self, g: GameId) -> GameId {
        if let Some(n) = self.as_integer(g) {
            let unit = if n >= 0 { self.up() } else { self.down() };
            let mut acc = self.zero();
            for _ in 0..n.unsigned_abs() {
                acc = self.add(acc, unit);
            }
            return acc;
        }
        let double_up_star = self.kupstar(2, true);
        let double_down_star = self.negate(double_up_star);
        let left = self.left_options(g).to_vec();
        let right = self.right_options(g).to_vec();
        let left: Vec<GameId> = left
            .into_iter()
            .map(|x| {
                let p = self.product_up(x);
                self.add(p, double_up_star)
            })
            .collect();
        let right: Vec<GameId> = right
            .into_iter()
            .map(|x| {
                let p = self.product_up(x);
                self.add(p, double_down_star)
            })
            .collect();
        self.construct(left, right)
    }

    /// Atomic weight of an all-small game, by the constructive recursion on
    /// option weights with the far-star correction when that recursion
    /// lands on an integer.
    pub fn atomic_weight(&mut self, g: GameId) -> Result<GameId> {
        if !self.is_all_small(g) {
            return Err(Error::NotAllSmall(self.format_value(g, false)));
        }
        self.atomic_weight_inner(g)
    }

    /// Atomic weight as an integer; errors when the weight is not an integer.
    pub fn integer_atomic_weight(&mut self, g: GameId) -> Result<i64> {
        let aw = self.atomic_weight(g)?;
        self.as_integer(aw).ok_or_else(|| {
            Error::Inconsistent(format!(
                "atomic weight {} of {} is not an integer",
                self.format_value(aw, false),
                self.format_value(g, false)
            ))
        })
    }

    fn atomic_weight_inner(&mut self, g: GameId) -> Result<GameId> {
        if let Some(&aw) = self.atomic_weights.get(&g) {
            return Ok(aw);
        }
        let minus_two = self.integer(-2);
        let plus_two = self.integer(2);

        let mut left = Vec::new();
        for gl in self.left_options(g).to_vec() {
            let w = self.atomic_weight_inner(gl)?;
            left.push(self.add(w, minus_two));
        }
        let mut right = Vec::new();
        for gr in self.right_options(g).to_vec() {
            let w = self.atomic_weight_inner(gr)?;
            right.push(self.add(w, plus_two));
        }

        let candidate = self.construct(left.iter().copied(), right.iter().copied());
        let aw = if self.as_integer(candidate).is_none() {
            candidate
        } else if left.is_empty() && right.is_empty() {
            self.zero()
        } else {
            match self.far_star_compare(g)? {
                FarStarOrder::Fuzzy => self.zero(),
                // least n with n |> every adjusted Left weight
                FarStarOrder::Less => {
                    let n = self.integer_bound(g, &left, true)?;
                    self.integer(n)
                }
                // greatest n with n <| every adjusted Right weight
                FarStarOrder::Greater => {
                    let n = self.integer_bound(g, &right, false)?;
                    self.integer(n)
                }
            }
        };
        self.atomic_weights.insert(g, aw);
        Ok(aw)
    }

    fn integer_bound(&mut self, g: GameId, set: &[GameId], least: bool) -> Result<i64> {
        if set.is_empty() {
            return Err(Error::Inconsistent(format!(
                "empty option set while bounding the atomic weight of {}",
                self.format_value(g, false)
            )));
        }
        // every game born by day b lies in [-b, b]
        let b = set.iter().map(|&x| self.birthday(x)).max().unwrap_or(0) as i64 + 1;
        let admissible = |arena: &mut Arena, n: i64| {
            let ng = arena.integer(n);
            set.iter().all(|&x| {
                if least {
                    !arena.le(ng, x)
                } else {
                    !arena.le(x, ng)
                }
            })
        };
        let found = if least {
            (-b..=b).find(|&n| admissible(self, n))
        } else {
            (-b..=b).rev().find(|&n| admissible(self, n))
        };
        found.ok_or_else(|| {
            Error::Inconsistent(format!(
                "no integer bound found for the atomic weight of {}",
                self.format_value(g, false)
            ))
        })
    }
}
