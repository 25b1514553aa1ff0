use crate::ferrers::Partition;
use crate::strip::{Position, Stone, Strip};

/// Every alive strip of length `2..=max_len`, by length and then
/// lexicographically with `b < w`.
pub fn enumerate_strips(max_len: usize) -> impl Iterator<Item = Strip> {
    (2..=max_len).flat_map(|len| {
        let inner = len - 2;
        (0u64..1 << inner).map(move |mask| {
            let mut stones = Vec::with_capacity(len);
            stones.push(Stone::Black);
            for bit in (0..inner).rev() {
                stones.push(if mask >> bit & 1 == 1 {
                    Stone::White
                } else {
                    Stone::Black
                });
            }
            stones.push(Stone::White);
            Strip::from_stones(&stones)
        })
    })
}

/// Every multiset of alive strips with `2..=max_stones` stones in total,
/// ordered by stone count and then by text.
pub fn enumerate_positions(max_stones: usize) -> Vec<Position> {
    let strips: Vec<Strip> = enumerate_strips(max_stones).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_positions(&strips, 0, max_stones, &mut current, &mut out);
    out.sort_by_cached_key(|p| (p.stones(), p.to_string()));
    out
}

fn extend_positions(
    strips: &[Strip],
    from: usize,
    budget: usize,
    current: &mut Vec<Strip>,
    out: &mut Vec<Position>,
) {
    for i in from..strips.len() {
        let s = &strips[i];
        if s.len() > budget {
            // strips are ordered by length
            break;
        }
        current.push(s.clone());
        out.push(Position::new(current.iter().cloned()));
        extend_positions(strips, i, budget - s.len(), current, out);
        current.pop();
    }
}

/// Every partition whose boundary walk has at most `max_steps` steps.
pub fn partitions_up_to(max_steps: usize) -> Vec<Partition> {
    fn go(max_row: usize, rows: &mut Vec<usize>, max_steps: usize, out: &mut Vec<Partition>) {
        let first = rows.first().copied().unwrap_or(0);
        for r in 1..=max_row {
            let width = if rows.is_empty() { r } else { first };
            if rows.len() + 1 + width > max_steps {
                break;
            }
            rows.push(r);
            out.push(Partition::new(rows.clone()).expect("rows are valid"));
            go(r, rows, max_steps, out);
            rows.pop();
        }
    }
    let mut out = vec![Partition::default()];
    go(max_steps, &mut Vec::new(), max_steps, &mut out);
    out
}
