//! Whitespace-column plot data, one block per (observable, overlay), plus a
//! gnuplot script reproducing the four figure panels.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::optics::MediumResponse;
use crate::sweep::csv::{fmt_num, OutputError};
use crate::sweep::grid::SweepGrid;

type Getter = fn(&MediumResponse<f64>) -> f64;

pub const OBSERVABLES: [(&str, Getter); 7] = [
    ("re_eps", |m| m.eps_r.re),
    ("im_eps", |m| m.eps_r.im),
    ("re_mu", |m| m.mu_r.re),
    ("im_mu", |m| m.mu_r.im),
    ("re_n", |m| m.n.re),
    ("im_n", |m| m.n.im),
    ("fom", |m| m.fom),
];

/// Blocks are separated by two blank lines so gnuplot's `index` addresses
/// them as `observable * overlays + overlay`.
pub fn plot_text(grid: &SweepGrid) -> String {
    let mut s = String::new();
    for (name, get) in OBSERVABLES {
        for &os in &grid.omega_s {
            let _ = writeln!(s, "# observable {name}");
            let _ = writeln!(s, "# omega_s_over_gamma {}", fmt_num(os));
            let _ = writeln!(s, "# delta_p_over_gamma {name}");
            for r in grid.overlay(os) {
                let v = r.response().map(get).unwrap_or(f64::NAN);
                let _ = writeln!(s, "{} {}", fmt_num(r.delta_p_over_gamma), fmt_num(v));
            }
            s.push_str("\n\n");
        }
    }
    s
}

pub fn script_text(grid: &SweepGrid, data_file: &str) -> String {
    let overlays = grid.omega_s.len();
    let dash = ["solid", "dotted", "dashed"];
    let mut s = String::new();
    let _ = writeln!(s, "# gnuplot script for {data_file}");
    s.push_str("set xlabel 'Δp/γ'\nset key top right\n");
    let panels: [(&str, &[usize], bool); 4] = [
        ("fig2_real_eps_mu.png", &[0, 2], false),
        ("fig3_imag_eps_mu.png", &[1, 3], false),
        ("fig4_refractive_index.png", &[4, 5], false),
        ("fig5_fom.png", &[6], true),
    ];
    for (png, obs, logy) in panels {
        let _ = writeln!(s, "set terminal pngcairo size 1200,450\nset output '{png}'");
        let _ = writeln!(
            s,
            "{}",
            if logy {
                "set logscale y"
            } else {
                "unset logscale y"
            }
        );
        if obs.len() > 1 {
            let _ = writeln!(s, "set multiplot layout 1,{}", obs.len());
        }
        for &o in obs {
            let _ = writeln!(s, "set ylabel '{}'", OBSERVABLES[o].0);
            let plots: Vec<String> = grid
                .omega_s
                .iter()
                .enumerate()
                .map(|(k, os)| {
                    format!(
                        "'{data_file}' index {} using 1:2 with lines dashtype {} title 'Ωs={}γ'",
                        o * overlays + k,
                        k % dash.len() + 1,
                        fmt_num(*os)
                    )
                })
                .collect();
            let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
        }
        if obs.len() > 1 {
            s.push_str("unset multiplot\n");
        }
    }
    s
}

/// Writes the data file at `path` and the script next to it (`.gp`).
/// Returns the script path.
pub fn emit_plotdata(grid: &SweepGrid, path: &Path) -> Result<PathBuf, OutputError> {
    let write = |p: &Path, text: &str| -> Result<(), OutputError> {
        let wrap = |source| OutputError {
            path: p.to_path_buf(),
            source,
        };
        let mut f = io::BufWriter::new(std::fs::File::create(p).map_err(wrap)?);
        f.write_all(text.as_bytes()).map_err(wrap)?;
        f.flush().map_err(wrap)
    };
    write(path, &plot_text(grid))?;
    let script = path.with_extension("gp");
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    write(&script, &script_text(grid, &name))?;
    Ok(script)
}
