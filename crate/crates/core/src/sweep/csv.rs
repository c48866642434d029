use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::sweep::grid::{SweepGrid, SweepRecord};

pub const CSV_HEADER: &str =
    "omega_s_over_gamma,delta_p_over_gamma,re_eps,im_eps,re_mu,im_mu,re_n,im_n,fom,label";

#[derive(Debug, thiserror::Error)]
#[error("cannot write {path}: {source}")]
pub struct OutputError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

/// Shortest round-trip decimal; `inf` for +∞, `nan` for missing values.
pub(crate) fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{x}")
    }
}

fn row(r: &SweepRecord) -> String {
    let vals = match r.response() {
        Some(m) => [
            m.eps_r.re, m.eps_r.im, m.mu_r.re, m.mu_r.im, m.n.re, m.n.im, m.fom,
        ],
        None => [f64::NAN; 7],
    };
    let mut cols = vec![fmt_num(r.omega_s_over_gamma), fmt_num(r.delta_p_over_gamma)];
    cols.extend(vals.iter().map(|v| fmt_num(*v)));
    cols.push(r.label_text().to_string());
    cols.join(",")
}

pub fn write_csv<W: Write>(grid: &SweepGrid, mut out: W) -> io::Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for r in &grid.records {
        out.write_all(row(r).as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn emit_csv(grid: &SweepGrid, path: &Path) -> Result<(), OutputError> {
    let wrap = |source| OutputError {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::create(path).map_err(wrap)?;
    write_csv(grid, io::BufWriter::new(file)).map_err(wrap)
}
