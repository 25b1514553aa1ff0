use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::game::Outcome;
use crate::strip::Strip;

use super::enumerate::enumerate_strips;
use super::map_sharded;

/// One census line. Field order is the JSONL key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub strip: String,
    pub length: usize,
    pub delta: i64,
    pub outcome: Outcome,
    pub value: String,
    pub aw: i64,
}

fn record(ev: &mut Evaluator, s: &Strip) -> Result<CensusRecord> {
    let g = ev.strip_value(s);
    let aw = ev.integer_atomic_weight(g)?;
    let delta = s.delta();
    if aw != delta {
        return Err(Error::Inconsistent(format!(
            "{s}: aw {aw} differs from delta {delta}"
        )));
    }
    Ok(CensusRecord {
        strip: s.to_string(),
        length: s.len(),
        delta,
        outcome: ev.outcome(g),
        value: ev.format_value(g, true),
        aw,
    })
}

/// One record per alive strip up to `max_len`, in enumeration order. A strip
/// whose atomic weight differs from its excess aborts the census.
pub fn census_records(ev: &mut Evaluator, max_len: usize) -> Result<Vec<CensusRecord>> {
    enumerate_strips(max_len).map(|s| record(ev, &s)).collect()
}

/// [`census_records`] sharded over `jobs` threads; output order is unchanged.
pub fn census_parallel(max_len: usize, jobs: usize) -> Result<Vec<CensusRecord>> {
    let strips: Vec<Strip> = enumerate_strips(max_len).collect();
    map_sharded(&strips, jobs, record).into_iter().collect()
}

pub fn write_census(records: &[CensusRecord], mut sink: impl Write) -> Result<()> {
    for r in records {
        let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(sink, "{line}")?;
    }
    sink.flush()?;
    Ok(())
}

/// Computes and writes the census, returning the number of records.
pub fn census(ev: &mut Evaluator, max_len: usize, sink: impl Write) -> Result<usize> {
    let records = census_records(ev, max_len)?;
    write_census(&records, sink)?;
    Ok(records.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_shape() {
        let mut ev = Evaluator::new();
        let mut out = Vec::new();
        assert_eq!(census(&mut ev, 7, &mut out).unwrap(), 63);
        let text = String::from_utf8(out).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(
            first,
            r#"{"strip":"bw","length":2,"delta":0,"outcome":"N","value":"*","aw":0}"#
        );
        let bwwbw = text
            .lines()
            .map(|l| serde_json::from_str::<CensusRecord>(l).unwrap())
            .find(|r| r.strip == "bwwbw")
            .unwrap();
        assert_eq!((bwwbw.delta, bwwbw.outcome, bwwbw.aw), (1, Outcome::L, 1));
        assert_eq!(bwwbw.value, "^");
    }

    #[test]
    fn parallel_matches_serial() {
        let mut ev = Evaluator::new();
        let serial = census_records(&mut ev, 7).unwrap();
        assert_eq!(census_parallel(7, 4).unwrap(), serial);
    }
}
