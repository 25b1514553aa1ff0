//! Bijection between alive strips and Ferrers diagrams.
//!
//! Walking the diagram boundary from the top-right corner to the bottom-left
//! corner, each step down is a black stone and each step left is a white
//! stone. Row `i` therefore has as many cells as there are white stones to
//! the right of the `i`-th black stone.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::strip::{Stone, Strip};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Partition> {
        if rows.contains(&0) {
            return Err(Error::Partition("rows must be positive".to_string()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(
                "rows must be weakly decreasing".to_string(),
            ));
        }
        Ok(Partition(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Boundary steps: one per row plus the width of the first row.
    pub fn boundary_len(&self) -> usize {
        self.0.len() + self.0.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        f.write_str(&rows.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Partition> {
        if text.is_empty() {
            return Ok(Partition::default());
        }
        let rows = text
            .split(',')
            .map(|r| {
                r.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Partition(format!("bad row {r:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

pub fn to_ferrers(strip: &Strip) -> Partition {
    let stones = strip.stones();
    let mut whites_after = stones.iter().filter(|&&s| s == Stone::White).count();
    let mut rows = Vec::new();
    for &s in stones {
        match s {
            Stone::Black => rows.push(whites_after),
            Stone::White => whites_after -= 1,
        }
    }
    Partition(rows)
}

pub fn from_ferrers(partition: &Partition) -> Strip {
    let rows = partition.rows();
    let mut stones = Vec::with_capacity(partition.boundary_len());
    for (i, &r) in rows.iter().enumerate() {
        let next = rows.get(i + 1).copied().unwrap_or(0);
        stones.push(Stone::Black);
        stones.extend(std::iter::repeat_n(Stone::White, r - next));
    }
    Strip::from_stones(&stones)
}
