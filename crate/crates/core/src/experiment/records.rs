//! CSV output with the fixed column order `m,trial,seed,excess_risk,elapsed_ms`.

use std::io::{Read, Write};
use std::path::Path;

use super::run::TrialRecord;
use crate::Result;

pub const CSV_HEADER: [&str; 5] = ["m", "trial", "seed", "excess_risk", "elapsed_ms"];

pub fn write_records<W: Write>(records: &[TrialRecord], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    // the header is written explicitly so an empty run still has one
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(&[
            r.m.to_string(),
            r.trial.to_string(),
            r.seed.to_string(),
            r.excess_risk.to_string(),
            r.elapsed_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_records_file(records: &[TrialRecord], path: impl AsRef<Path>) -> Result<()> {
    write_records(records, std::fs::File::create(path)?)
}

pub fn read_records<R: Read>(reader: R) -> Result<Vec<TrialRecord>> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(crate::Error::Spec(format!("unexpected CSV header `{}`", header.iter().collect::<Vec<_>>().join(","))));
    }
    r.deserialize().map(|row| row.map_err(Into::into)).collect()
}

pub fn read_records_file(path: impl AsRef<Path>) -> Result<Vec<TrialRecord>> {
    read_records(std::fs::File::open(path)?)
}

/// Sorts by `(m, trial, seed)`, the order in which canonical files are written.
pub fn canonical_sort(records: &mut [TrialRecord]) {
    records.sort_by_key(|r| (r.m, r.trial, r.seed));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let records = vec![
            TrialRecord { m: 10, trial: 0, seed: u64::MAX, excess_risk: 0.1 + 0.2, elapsed_ms: 0.0 },
            TrialRecord { m: 20, trial: 3, seed: 1, excess_risk: 1e-300, elapsed_ms: 12.5 },
            TrialRecord { m: 20, trial: 4, seed: 2, excess_risk: 0.0, elapsed_ms: 1.0 / 3.0 },
        ];
        let mut buf = Vec::new();
        write_records(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("m,trial,seed,excess_risk,elapsed_ms\n"));
        assert_eq!(read_records(buf.as_slice()).unwrap(), records);
    }

    #[test]
    fn canonical_sort_orders_rows() {
        let mut v = vec![
            TrialRecord { m: 20, trial: 1, seed: 5, excess_risk: 0.0, elapsed_ms: 0.0 },
            TrialRecord { m: 10, trial: 2, seed: 6, excess_risk: 0.0, elapsed_ms: 0.0 },
            TrialRecord { m: 10, trial: 0, seed: 7, excess_risk: 0.0, elapsed_ms: 0.0 },
        ];
        canonical_sort(&mut v);
        assert_eq!(v.iter().map(|r| (r.m, r.trial)).collect::<Vec<_>>(), vec![(10, 0), (10, 2), (20, 1)]);
    }

    #[test]
    fn rejects_wrong_header() {
        assert!(read_records("a,b\n1,2\n".as_bytes()).is_err());
    }
}
