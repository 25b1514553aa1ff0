use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bipass_core::verify::{self, Report};
use bipass_core::{from_ferrers, to_ferrers, Evaluator, GameId, Partition, Position, Strip};
use clap::{ArgAction, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bipass",
    version,
    about = "Values, outcomes and theorem checks for BIPASS"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Use aliases such as ^, v* and 2.^*+* when printing values.
    #[arg(
        long,
        global = true,
        default_value_t = true,
        action = ArgAction::Set,
        num_args = 0..=1,
        default_missing_value = "true",
        value_name = "BOOL"
    )]
    pretty: bool,

    /// Worker threads for census and search-star2.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical value of a position.
    Value {
        #[arg(value_parser = parse_position)]
        position: Position,
    },
    /// Atomic weight of a position.
    Aw {
        #[arg(value_parser = parse_position)]
        position: Position,
    },
    /// Normal-play outcome class (L, R, N or P).
    Outcome {
        #[arg(value_parser = parse_position)]
        position: Position,
    },
    /// Order relation between two positions.
    Compare {
        #[arg(value_parser = parse_position)]
        first: Position,
        #[arg(value_parser = parse_position)]
        second: Position,
    },
    /// JSONL census of every strip up to a length.
    Census {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search all small positions and single strips for the value *2.
    SearchStar2 {
        #[arg(long, default_value_t = 8)]
        max_stones: usize,
        /// Length bound for the single-strip checks.
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Reproduce the table of small strips.
    Table1,
    /// Check the k.^*+* family in both directions.
    Family {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Length bound for the converse scan over all strips.
        #[arg(long, default_value_t = 10)]
        converse_len: usize,
    },
    /// Misère-play outcome class.
    Misere {
        #[arg(value_parser = parse_position)]
        position: Position,
    },
    /// Check that an excess of two wins in misère play.
    MisereTwoAhead {
        #[arg(long, default_value_t = 8)]
        max_stones: usize,
    },
    /// Ferrers diagram of a strip, or the strip of a diagram.
    Ferrers {
        #[arg(value_parser = parse_strip, required_unless_present = "from", conflicts_with = "from")]
        strip: Option<Strip>,
        /// Comma-separated row lengths, e.g. 4,1.
        #[arg(long, value_parser = parse_partition)]
        from: Option<Partition>,
    },
}

fn parse_position(text: &str) -> Result<Position, String> {
    text.parse().map_err(|e: bipass_core::Error| e.to_string())
}

fn parse_strip(text: &str) -> Result<Strip, String> {
    text.parse().map_err(|e: bipass_core::Error| e.to_string())
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e: bipass_core::Error| e.to_string())
}

struct Ctx {
    ev: Evaluator,
    json: bool,
    pretty: bool,
    jobs: usize,
}

impl Ctx {
    fn text(&mut self, g: GameId) -> String {
        self.ev.format_value(g, self.pretty)
    }

    /// Integers as JSON numbers, other weights as value text.
    fn aw_json(&mut self, g: GameId) -> bipass_core::Result<Value> {
        let aw = self.ev.atomic_weight(g)?;
        Ok(match self.ev.as_integer(aw) {
            Some(n) => json!(n),
            None => json!(self.text(aw)),
        })
    }
}

fn emit_reports(ctx: &Ctx, out: &mut impl Write, reports: &[Report]) -> io::Result<bool> {
    for r in reports {
        eprintln!("{}: {:.3}s", r.name, r.elapsed.as_secs_f64());
    }
    if ctx.json {
        let items: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "scope": r.scope,
                    "checked": r.checked,
                    "failures": r.failures,
                    "passed": r.passed(),
                })
            })
            .collect();
        writeln!(out, "{}", Value::Array(items))?;
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
    }
    Ok(reports.iter().all(Report::passed))
}

fn run(ctx: &mut Ctx, command: Command, out: &mut impl Write) -> bipass_core::Result<bool> {
    match command {
        Command::Value { position } => {
            let g = ctx.ev.value(&position);
            let value = ctx.text(g);
            if ctx.json {
                let aw = ctx.aw_json(g)?;
                let outcome = ctx.ev.outcome(g);
                let doc = json!({
                    "value": value,
                    "delta": position.delta(),
                    "aw": aw,
                    "outcome": outcome,
                });
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Aw { position } => {
            let g = ctx.ev.value(&position);
            let aw = ctx.aw_json(g)?;
            if ctx.json {
                writeln!(out, "{}", json!({ "aw": aw, "delta": position.delta() }))?;
            } else {
                match aw {
                    Value::String(s) => writeln!(out, "{s}")?,
                    other => writeln!(out, "{other}")?,
                }
            }
        }
        Command::Outcome { position } => {
            let g = ctx.ev.value(&position);
            let o = ctx.ev.outcome(g);
            if ctx.json {
                writeln!(out, "{}", json!({ "outcome": o }))?;
            } else {
                writeln!(out, "{o}")?;
            }
        }
        Command::Compare { first, second } => {
            let (g, h) = (ctx.ev.value(&first), ctx.ev.value(&second));
            let c = ctx.ev.compare(g, h);
            if ctx.json {
                writeln!(out, "{}", json!({ "comparison": c.to_string() }))?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Misere { position } => {
            let o = verify::misere_outcome(&position);
            if ctx.json {
                writeln!(out, "{}", json!({ "misere_outcome": o }))?;
            } else {
                writeln!(out, "{o}")?;
            }
        }
        Command::Ferrers { strip, from } => {
            let text = match (strip, from) {
                (_, Some(p)) => from_ferrers(&p).to_string(),
                (Some(s), None) => to_ferrers(&s).to_string(),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            if ctx.json {
                writeln!(out, "{}", json!({ "result": text }))?;
            } else {
                writeln!(out, "{text}")?;
            }
        }
        Command::Census { max_len, out: path } => {
            let records = if ctx.jobs > 1 {
                verify::census_parallel(max_len, ctx.jobs)?
            } else {
                verify::census_records(&mut ctx.ev, max_len)?
            };
            match path {
                Some(path) => {
                    verify::write_census(&records, BufWriter::new(File::create(&path)?))?;
                    eprintln!("wrote {} records to {}", records.len(), path.display());
                }
                None => verify::write_census(&records, &mut *out)?,
            }
        }
        Command::Table1 => {
            if !ctx.json {
                for text in [
                    "bw", "bww", "bwww", "bwbw", "bbww", "bwwww", "bwwbw", "bwbww", "bbwww",
                ] {
                    let s: Strip = text.parse()?;
                    let g = ctx.ev.strip_value(&s);
                    let o = ctx.ev.outcome(g);
                    let value = ctx.text(g);
                    let aw = ctx.aw_json(g)?;
                    writeln!(out, "{text:<6} {o} {:>3} {aw:>3}  {value}", s.delta())?;
                }
            }
            let report = verify::verify_table1(&mut ctx.ev);
            return Ok(emit_reports(ctx, out, &[report])?);
        }
        Command::Family {
            max_len,
            converse_len,
        } => {
            let reports = [
                verify::verify_family_forward(&mut ctx.ev, max_len),
                verify::verify_family_converse(&mut ctx.ev, converse_len),
            ];
            return Ok(emit_reports(ctx, out, &reports)?);
        }
        Command::SearchStar2 {
            max_stones,
            max_len,
        } => {
            let search = if ctx.jobs > 1 {
                verify::search_star2_parallel(max_stones, ctx.jobs)
            } else {
                verify::search_star2(&mut ctx.ev, max_stones)
            };
            let singles = verify::verify_single_strip_values(&mut ctx.ev, max_len);
            return Ok(emit_reports(ctx, out, &[search, singles])?);
        }
        Command::MisereTwoAhead { max_stones } => {
            let report = verify::verify_misere_two_ahead(max_stones);
            return Ok(emit_reports(ctx, out, &[report])?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        ev: Evaluator::new(),
        json: cli.json,
        pretty: cli.pretty,
        jobs: cli.jobs as usize,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&mut ctx, cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
