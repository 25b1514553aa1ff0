use std::collections::HashSet;

use crate::eval::Evaluator;
use crate::ferrers::{from_ferrers, to_ferrers};
use crate::game::{Comparison, GameId, Outcome};
use crate::strip::{Player, Position, Stone, Strip};

use super::enumerate::{enumerate_positions, enumerate_strips, partitions_up_to};
use super::Report;

/// The value of the conjugate strip is the negative of the value.
pub fn verify_conjugation(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new("conjugation", format!("strips of length <= {max_len}"));
    for s in enumerate_strips(max_len) {
        let g = ev.strip_value(&s);
        let c = s.conjugate();
        let gc = ev.strip_value(&c);
        let neg = ev.negate(g);
        report.check(gc == neg, || {
            format!(
                "{s}: conjugate {c} has value {}, negative is {}",
                ev.format_value(gc, true),
                ev.format_value(neg, true)
            )
        });
    }
    report.finish()
}

/// Normalising any raw stone sequence gives an alive strip, and normalising
/// again changes nothing.
pub fn verify_normalize(max_len: usize) -> Report {
    let mut report = Report::new("normalize", format!("raw sequences of length <= {max_len}"));
    for len in 0..=max_len {
        for mask in 0u64..1 << len {
            let raw: Vec<Stone> = (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Stone::White
                    } else {
                        Stone::Black
                    }
                })
                .collect();
            let once = Strip::normalize(&raw);
            let twice = Strip::normalize(once.stones());
            let alive = once.is_empty()
                || (once.stones()[0] == Stone::Black
                    && once.stones()[once.len() - 1] == Stone::White);
            report.check(once == twice && alive, || {
                let text: String = raw
                    .iter()
                    .map(|s| if *s == Stone::Black { 'b' } else { 'w' })
                    .collect();
                format!("{text}: normalizes to {once}, then {twice}")
            });
        }
    }
    report.finish()
}

/// A move changes the excess by at most one in the mover's favour, the
/// unit-bypass is the unique move that does so, and larvae lose excess on
/// every move.
pub fn verify_delta_steps(max_len: usize) -> Report {
    let mut report = Report::new("delta steps", format!("strips of length <= {max_len}"));
    for s in enumerate_strips(max_len) {
        let d = s.delta();
        for (player, sign) in [(Player::Left, 1), (Player::Right, -1)] {
            let options = s.options(player);
            let gains: Vec<&Strip> = options
                .iter()
                .filter(|o| sign * (o.delta() - d) == 1)
                .collect();
            let bounded = options.iter().all(|o| sign * (o.delta() - d) <= 1);
            report.check(bounded, || {
                format!("{s}: a {player:?} move gains more than one")
            });
            let expected: Vec<Strip> = s.unit_bypass(player).into_iter().collect();
            let got: Vec<Strip> = gains.into_iter().cloned().collect();
            report.check(got == expected, || {
                format!("{s}: {player:?} gaining moves {got:?}, unit-bypass {expected:?}")
            });
        }
        if s.len() > 2 {
            let all = |p: Player| s.options(p).into_iter();
            if s.blacks() == 1 {
                let ok = all(Player::Left)
                    .chain(all(Player::Right))
                    .all(|o| o.delta() < d);
                report.check(ok, || {
                    format!("{s}: a move on a one-black strip keeps or raises delta")
                });
            }
            if s.whites() == 1 {
                let ok = all(Player::Left)
                    .chain(all(Player::Right))
                    .all(|o| o.delta() > d);
                report.check(ok, || {
                    format!("{s}: a move on a one-white strip keeps or lowers delta")
                });
            }
        }
    }
    report.finish()
}

/// Strips and partitions round-trip through the diagram encoding.
pub fn verify_ferrers(max_len: usize) -> Report {
    let mut report = Report::new("ferrers", format!("boundaries of <= {max_len} steps"));
    for s in enumerate_strips(max_len) {
        let p = to_ferrers(&s);
        let back = from_ferrers(&p);
        report.check(back == s, || {
            format!("{s}: diagram {p} maps back to {back}")
        });
    }
    for p in partitions_up_to(max_len) {
        let s = from_ferrers(&p);
        let back = to_ferrers(&s);
        report.check(back == p, || {
            format!("[{p}]: strip {s} maps back to [{back}]")
        });
    }
    report.finish()
}

fn expected_outcome(c: Comparison) -> Outcome {
    match c {
        Comparison::Greater => Outcome::L,
        Comparison::Less => Outcome::R,
        Comparison::Equivalent => Outcome::P,
        Comparison::Fuzzy => Outcome::N,
    }
}

/// Comparison with zero agrees with the searched outcome, and comparing two
/// games agrees with the outcome of their difference.
pub fn verify_outcome_coherence(
    ev: &mut Evaluator,
    max_len: usize,
    max_stones: usize,
    pair_len: usize,
) -> Report {
    let mut report = Report::new(
        "outcome coherence",
        format!(
            "strips of length <= {max_len}, positions of <= {max_stones} stones, \
             strip pairs of length <= {pair_len}"
        ),
    );
    let zero = ev.zero();
    let singles = enumerate_strips(max_len).map(Position::from);
    let sums = enumerate_positions(max_stones)
        .into_iter()
        .filter(|p| p.len() > 1);
    for p in singles.chain(sums) {
        let g = ev.value(&p);
        let c = ev.compare(g, zero);
        let o = ev.outcome(g);
        report.check(expected_outcome(c) == o, || {
            format!("{p}: compares {c} with 0 but has outcome {o}")
        });
    }
    let small: Vec<(Strip, GameId)> = enumerate_strips(pair_len)
        .map(|s| {
            let g = ev.strip_value(&s);
            (s, g)
        })
        .collect();
    for (s, g) in &small {
        for (t, h) in &small {
            let c = ev.compare(*g, *h);
            let diff = ev.subtract(*g, *h);
            let o = ev.outcome(diff);
            report.check(expected_outcome(c) == o, || {
                format!("{s} vs {t}: compares {c} but the difference has outcome {o}")
            });
        }
    }
    report.finish()
}

/// The two far-star probes agree for every strip value.
pub fn verify_far_star_stability(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new("far-star probes", format!("strips of length <= {max_len}"));
    for s in enumerate_strips(max_len) {
        let g = ev.strip_value(&s);
        if let Err(e) = ev.far_star_compare(g) {
            report.fail(format!("{s}: {e}"));
        } else {
            report.checked += 1;
        }
    }
    report.finish()
}

/// The arithmetic single-strip outcome rule agrees with the game search.
pub fn verify_single_strip_outcomes(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new(
        "single strip outcomes",
        format!("strips of length <= {max_len}"),
    );
    for s in enumerate_strips(max_len) {
        let g = ev.strip_value(&s);
        let (rule, searched) = (s.single_strip_outcome(), ev.outcome(g));
        report.check(rule == searched, || {
            format!("{s}: rule gives {rule}, search gives {searched}")
        });
    }
    report.finish()
}

/// Either both players can move or neither can, so every value is all-small.
pub fn verify_move_duality(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new("move duality", format!("strips of length <= {max_len}"));
    for s in enumerate_strips(max_len) {
        let l = s.options(Player::Left).is_empty();
        let r = s.options(Player::Right).is_empty();
        report.check(l == r, || format!("{s}: only one player can move"));
        let g = ev.strip_value(&s);
        let small = ev.is_all_small(g);
        report.check(small, || {
            format!("{s}: value {} is not all-small", ev.format_value(g, true))
        });
    }
    report.finish()
}

/// Each length contributes `2^(n-2)` distinct alive strips.
pub fn verify_strip_count(max_len: usize) -> Report {
    let mut report = Report::new("strip count", format!("lengths 2..={max_len}"));
    let strips: Vec<Strip> = enumerate_strips(max_len).collect();
    let distinct: HashSet<&Strip> = strips.iter().collect();
    report.check(distinct.len() == strips.len(), || {
        "duplicate strips enumerated".to_string()
    });
    for n in 2..=max_len {
        let count = strips.iter().filter(|s| s.len() == n).count();
        report.check(count == 1 << (n - 2), || {
            format!("length {n}: {count} strips")
        });
    }
    for s in &strips {
        report.check(Strip::normalize(s.stones()) == *s, || {
            format!("{s}: not alive")
        });
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let mut ev = Evaluator::new();
        for report in [
            verify_conjugation(&mut ev, 6),
            verify_normalize(6),
            verify_delta_steps(7),
            verify_ferrers(7),
            verify_outcome_coherence(&mut ev, 6, 5, 4),
            verify_far_star_stability(&mut ev, 6),
            verify_single_strip_outcomes(&mut ev, 6),
            verify_move_duality(&mut ev, 6),
            verify_strip_count(7),
        ] {
            assert!(report.passed(), "{report}");
        }
    }
}
