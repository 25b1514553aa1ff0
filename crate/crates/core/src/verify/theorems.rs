use std::collections::HashMap;

use crate::eval::Evaluator;
use crate::game::{Comparison, GameId, Outcome};
use crate::strip::{Player, Position, Strip};

use super::enumerate::{enumerate_positions, enumerate_strips};
use super::{map_sharded, Report};

fn strip(text: &str) -> Strip {
    text.parse().expect("fixture strip")
}

fn position(text: &str) -> Position {
    text.parse().expect("fixture position")
}

/// The nine small strips with `b <= w`, checked for outcome, value, excess
/// and atomic weight.
pub fn verify_table1(ev: &mut Evaluator) -> Report {
    let mut report = Report::new("table1", "9 strips of at most 5 stones");
    let (zero, star, up) = (ev.zero(), ev.star(), ev.up());
    let down = ev.down();
    let double_up_star = ev.sum([up, up, star]);
    let triple_up = ev.sum([up, up, up]);
    let pm = ev.construct([star, up], [star, down]);
    let x = ev.construct([double_up_star], [up, pm]);
    let y = ev.construct([zero], [pm, x]);

    let rows = [
        ("bw", Outcome::N, star, 0),
        ("bww", Outcome::L, up, 1),
        ("bwww", Outcome::L, double_up_star, 2),
        ("bwbw", Outcome::N, star, 0),
        ("bbww", Outcome::N, pm, 0),
        ("bwwww", Outcome::L, triple_up, 3),
        ("bwwbw", Outcome::L, up, 1),
        ("bwbww", Outcome::L, x, 1),
        ("bbwww", Outcome::L, y, 1),
    ];
    for (text, outcome, expected, delta) in rows {
        let s = strip(text);
        let g = ev.strip_value(&s);
        let got = ev.outcome(g);
        report.check(got == outcome, || {
            format!("{text}: outcome {got}, expected {outcome}")
        });
        let cmp = ev.compare(g, expected);
        report.check(cmp == Comparison::Equivalent, || {
            format!(
                "{text}: value {} is {cmp} than expected {}",
                ev.format_value(g, true),
                ev.format_value(expected, true)
            )
        });
        report.check(s.delta() == delta, || {
            format!("{text}: delta {}, expected {delta}", s.delta())
        });
        match ev.integer_atomic_weight(g) {
            Ok(aw) => report.check(aw == delta, || format!("{text}: aw {aw}, expected {delta}")),
            Err(e) => report.fail(format!("{text}: {e}")),
        }
    }
    report.finish()
}

/// Both directions of the `b w^(n+k) b^n w == k.^*+*` characterisation.
pub fn verify_family(ev: &mut Evaluator, forward_len: usize, converse_len: usize) -> Report {
    verify_family_forward(ev, forward_len).merge(verify_family_converse(ev, converse_len))
}

/// Every family strip of length at most `max_len`, and its mirror, has the
/// predicted value.
pub fn verify_family_forward(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new("family", format!("family strips of length <= {max_len}"));
    for k in 0..=max_len {
        for n in 0..=max_len {
            if 2 * n + k + 2 > max_len {
                break;
            }
            let s = Strip::family(n, k);
            let g = ev.strip_value(&s);
            let expected = ev.kupstar(k as u32, true);
            report.check(g == expected, || {
                format!(
                    "{s}: value {}, expected {}",
                    ev.format_value(g, true),
                    ev.format_value(expected, true)
                )
            });
            let m = Strip::mirror_family(n, k);
            let gm = ev.strip_value(&m);
            let expected = ev.kdownstar(k as u32, true);
            report.check(gm == expected, || {
                format!(
                    "{m}: value {}, expected {}",
                    ev.format_value(gm, true),
                    ev.format_value(expected, true)
                )
            });
        }
    }
    report.finish()
}

/// Every strip of length at most `max_len` whose value is some `±k.^*+*`
/// has the literal family (or mirrored family) shape, and vice versa.
pub fn verify_family_converse(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new(
        "family converse",
        format!("all strips of length <= {max_len}"),
    );
    let mut targets: HashMap<GameId, (usize, bool)> = HashMap::new();
    for k in (0..=max_len).rev() {
        let up = ev.kupstar(k as u32, true);
        targets.insert(up, (k, true));
        let down = ev.kdownstar(k as u32, true);
        targets.entry(down).or_insert((k, false));
    }
    for s in enumerate_strips(max_len) {
        let g = ev.strip_value(&s);
        let shape = s
            .family_parameters()
            .map(|(_, k)| (k, true))
            .or_else(|| s.conjugate().family_parameters().map(|(_, k)| (k, false)));
        let value = targets.get(&g).copied();
        report.check(shape == value, || {
            format!(
                "{s}: value {} matches family {value:?}, literal shape {shape:?}",
                ev.format_value(g, true)
            )
        });
    }
    report.finish()
}

/// Atomic weight equals the white excess on single strips and on sums.
pub fn verify_aw_delta(ev: &mut Evaluator, max_len: usize, max_stones: usize) -> Report {
    let mut report = Report::new(
        "aw = delta",
        format!("strips of length <= {max_len}, positions of <= {max_stones} stones"),
    );
    let singles = enumerate_strips(max_len).map(Position::from);
    let sums = enumerate_positions(max_stones)
        .into_iter()
        .filter(|p| p.len() > 1);
    for p in singles.chain(sums) {
        let g = ev.value(&p);
        let delta = p.delta();
        match ev.integer_atomic_weight(g) {
            Ok(aw) => report.check(aw == delta, || format!("{p}: aw {aw}, delta {delta}")),
            Err(e) => report.fail(format!("{p}: {e}")),
        }
    }
    report.finish()
}

/// `aw(g).^` is far-star equivalent to `g`, so the computed weight satisfies
/// the defining property.
pub fn verify_aw_definition(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new("aw definition", format!("strips of length <= {max_len}"));
    for s in enumerate_strips(max_len) {
        let g = ev.strip_value(&s);
        let result = ev.atomic_weight(g).and_then(|aw| {
            let p = ev.product_up(aw);
            ev.far_star_equiv(p, g).map(|ok| (aw, p, ok))
        });
        match result {
            Ok((aw, p, ok)) => report.check(ok, || {
                format!(
                    "{s}: aw {} gives product {} not far-star equivalent to {}",
                    ev.format_value(aw, true),
                    ev.format_value(p, true),
                    ev.format_value(g, true)
                )
            }),
            Err(e) => report.fail(format!("{s}: {e}")),
        }
    }
    report.finish()
}

/// Outcome laws driven by the white excess, plus the worked fixtures.
pub fn verify_outcome_rules(ev: &mut Evaluator, max_stones: usize) -> Report {
    let mut report = Report::new(
        "outcome rules",
        format!("positions of <= {max_stones} stones"),
    );
    for p in enumerate_positions(max_stones) {
        let g = ev.value(&p);
        let o = ev.outcome(g);
        let delta = p.delta();
        let ok = match delta {
            d if d >= 2 => o == Outcome::L,
            1 => o.left_wins_moving_first(),
            -1 => o.right_wins_moving_first(),
            d if d <= -2 => o == Outcome::R,
            _ if p.len() % 2 == 1 => o == Outcome::N,
            _ if p.strips().iter().all(Strip::is_larva) => o == Outcome::P,
            _ => true,
        };
        report.check(ok, || {
            format!("{p}: outcome {o} with delta {delta} and {} strips", p.len())
        });
    }

    for (text, expected) in [
        ("bww+bw", Outcome::N),
        ("bww+bww+bww+bbbbw", Outcome::P),
        ("bbww+bw", Outcome::N),
    ] {
        let g = ev.value(&position(text));
        let o = ev.outcome(g);
        report.check(o == expected, || {
            format!("{text}: outcome {o}, expected {expected}")
        });
    }

    let p = position("bbww+bw");
    let winners: Vec<String> = p
        .options(Player::Left)
        .into_iter()
        .filter(|q| {
            let g = ev.value(q);
            !ev.outcome(g).right_wins_moving_first()
        })
        .map(|q| q.to_string())
        .collect();
    report.check(winners == ["bw+bwbw"], || {
        format!("bbww+bw: Left winning moves {winners:?}, expected only bw+bwbw")
    });
    report.finish()
}

/// Bounds for sums with zero excess, split by the parity of the strip count.
pub fn verify_aw0_bounds(ev: &mut Evaluator, max_stones: usize) -> Report {
    let mut report = Report::new(
        "aw 0 bounds",
        format!("zero-excess positions of <= {max_stones} stones"),
    );
    let (zero, star, up, up_star) = (ev.zero(), ev.star(), ev.up(), ev.up_star());
    let (down, down_star) = (ev.down(), ev.down_star());
    for p in enumerate_positions(max_stones) {
        if p.delta() != 0 {
            continue;
        }
        let g = ev.value(&p);
        let odd = p.len() % 2 == 1;
        // (bound, strict) pairs for the lower and upper sides
        let (centre, strict, loose) = if odd {
            (zero, (down_star, up_star), (down, up))
        } else {
            (star, (down, up), (down_star, up_star))
        };
        let items = if odd { [1, 2, 3] } else { [4, 5, 6] };

        let c = ev.compare(g, centre);
        report.check(c == Comparison::Fuzzy, || {
            format!(
                "{p}: item {} expects fuzzy with {}, got {c}",
                items[0],
                ev.format_value(centre, true)
            )
        });
        let lo = ev.compare(g, strict.0);
        let hi = ev.compare(g, strict.1);
        report.check(lo == Comparison::Greater && hi == Comparison::Less, || {
            format!(
                "{p}: item {} expects {} < g < {}, got {lo} and {hi}",
                items[1],
                ev.format_value(strict.0, true),
                ev.format_value(strict.1, true)
            )
        });
        // a <| g <| b: g is not <= a and b is not <= g
        let above = !ev.le(g, loose.0);
        let below = !ev.le(loose.1, g);
        report.check(above && below, || {
            format!(
                "{p}: item {} expects {} <| g <| {}, got {above} and {below}",
                items[2],
                ev.format_value(loose.0, true),
                ev.format_value(loose.1, true)
            )
        });
        if odd && p.strips().iter().all(|s| ev.strip_value(s) == star) {
            report.check(g == star, || {
                format!("{p}: every strip is * but the sum is not")
            });
        }
        if !odd && p.strips().iter().all(Strip::is_larva) {
            report.check(g == zero, || format!("{p}: even sum of larvae is not 0"));
        }
    }
    report.finish()
}

/// Every position of at most `max_stones` stones whose value is `*2`.
pub fn search_star2(ev: &mut Evaluator, max_stones: usize) -> Report {
    let mut report = Report::new("no *2", format!("positions of <= {max_stones} stones"));
    let star2 = ev.nimber(2);
    for p in enumerate_positions(max_stones) {
        let g = ev.value(&p);
        report.check(g != star2, || format!("{p}: value *2"));
    }
    report.finish()
}

/// [`search_star2`] sharded over `jobs` threads.
pub fn search_star2_parallel(max_stones: usize, jobs: usize) -> Report {
    let report = Report::new("no *2", format!("positions of <= {max_stones} stones"));
    let positions = enumerate_positions(max_stones);
    let hits = map_sharded(&positions, jobs, |ev, p| {
        let star2 = ev.nimber(2);
        ev.value(p) == star2
    });
    let mut report = report;
    for (p, hit) in positions.iter().zip(hits) {
        report.check(!hit, || format!("{p}: value *2"));
    }
    report.finish()
}

/// Single strips: only `bw` can move to 0 for both players, and no strip
/// has value `*2` or `±^*`.
pub fn verify_single_strip_values(ev: &mut Evaluator, max_len: usize) -> Report {
    let mut report = Report::new(
        "single strip values",
        format!("strips of length <= {max_len}"),
    );
    let star2 = ev.nimber(2);
    let (up_star, down_star) = (ev.up_star(), ev.down_star());
    let bw = strip("bw");
    for s in enumerate_strips(max_len) {
        let ends = |p: Player| s.options(p).iter().any(Strip::is_empty);
        let both = ends(Player::Left) && ends(Player::Right);
        report.check(!both || s == bw, || {
            format!("{s}: both players can move to 0")
        });
        let g = ev.strip_value(&s);
        report.check(g != star2 && g != up_star && g != down_star, || {
            format!("{s}: value {}", ev.format_value(g, true))
        });
    }
    report.finish()
}

/// Option counts surviving in canonical form for three worked strips.
pub fn verify_canonical_survival(ev: &mut Evaluator) -> Report {
    let mut report = Report::new("canonical survival", "3 strips");
    // the last flag marks strips where every literal Left option survives
    for (text, left, right, all_survive) in [
        ("bbbwww", Some(3), Some(3), true),
        ("bbbbwwww", Some(2), Some(2), false),
        ("bbbwwwbw", Some(4), None, true),
    ] {
        let s = strip(text);
        let g = ev.strip_value(&s);
        let (nl, nr) = (ev.left_options(g).len(), ev.right_options(g).len());
        if let Some(left) = left {
            report.check(nl == left, || {
                format!("{text}: {nl} Left and {nr} Right canonical options, expected {left} Left")
            });
            if all_survive {
                let literal = s.options(Player::Left).len();
                report.check(literal == left, || {
                    format!("{text}: {literal} literal Left options, {left} expected to survive")
                });
            }
        }
        if let Some(right) = right {
            report.check(nr == right, || {
                format!("{text}: {nr} Right options, expected {right}")
            });
        }
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
            verify_table1(&mut ev),
            verify_family(&mut ev, 8, 7),
            verify_aw_delta(&mut ev, 6, 5),
            verify_aw_definition(&mut ev, 5),
            verify_outcome_rules(&mut ev, 6),
            verify_aw0_bounds(&mut ev, 6),
            search_star2(&mut ev, 6),
            verify_single_strip_values(&mut ev, 7),
        ] {
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn survival_counts() {
        let mut ev = Evaluator::new();
        let report = verify_canonical_survival(&mut ev);
        // the two symmetric strips behave as claimed
        assert_eq!(report.checked, 7);
        assert!(
            report.failures.iter().all(|f| f.starts_with("bbbwwwbw")),
            "{report}"
        );
        // the asymmetric one keeps all four of its Left options only in
        // the colour-swapped orientation
        let s = strip("bwbbbwww");
        let g = ev.strip_value(&s);
        assert_eq!(ev.left_options(g).len(), 4);
        assert_eq!(ev.right_options(g).len(), 1);
    }

    #[test]
    fn parallel_search_agrees() {
        let mut ev = Evaluator::new();
        let serial = search_star2(&mut ev, 6);
        let parallel = search_star2_parallel(6, 3);
        assert_eq!(serial.checked, parallel.checked);
        assert_eq!(serial.failures, parallel.failures);
    }
}
