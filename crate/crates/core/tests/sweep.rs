use std::path::Path;

use eit_nri::sweep::plot::{plot_text, OBSERVABLES};
use eit_nri::sweep::{
    emit_csv, emit_plotdata, load_config, run_sweep, run_sweep_with, write_csv, SweepConfig,
    SweepGrid, CSV_HEADER,
};
use eit_nri::CoherenceModel;

fn csv_bytes(grid: &SweepGrid) -> Vec<u8> {
    let mut out = Vec::new();
    write_csv(grid, &mut out).unwrap();
    out
}

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

#[test]
fn default_sweep_has_one_record_per_grid_point() {
    let grid = run_sweep(&SweepConfig::default()).unwrap();
    assert_eq!(grid.records.len(), 18003);
    assert_eq!(grid.error_count(), 0);
    // overlay-major, Δp ascending
    let expect: Vec<(f64, f64)> = [14.0, 18.0, 20.0]
        .iter()
        .flat_map(|&os| {
            SweepConfig::default()
                .delta_p_grid()
                .into_iter()
                .map(move |dp| (os, dp))
        })
        .collect();
    let got: Vec<(f64, f64)> = grid
        .records
        .iter()
        .map(|r| (r.omega_s_over_gamma, r.delta_p_over_gamma))
        .collect();
    assert_eq!(got, expect);
}

#[test]
fn csv_bytes_do_not_depend_on_worker_count() {
    let cfg = SweepConfig {
        delta_p_steps: 1201,
        ..SweepConfig::default()
    };
    let reference = csv_bytes(&run_sweep_with(&cfg, Some(1)).unwrap());
    for threads in [Some(2), Some(3), Some(8), None] {
        assert_eq!(
            csv_bytes(&run_sweep_with(&cfg, threads).unwrap()),
            reference,
            "{threads:?}"
        );
    }
    assert_eq!(csv_bytes(&run_sweep(&cfg).unwrap()), reference);
}

#[test]
fn csv_layout() {
    let cfg = SweepConfig {
        delta_p_steps: 2,
        omega_s: vec![14.0],
        ..SweepConfig::default()
    };
    let mut grid = run_sweep(&cfg).unwrap();
    grid.records.truncate(1);
    let text = String::from_utf8(csv_bytes(&grid)).unwrap();
    let lines: Vec<&str> = text.split_terminator('\n').collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], CSV_HEADER);
    assert!(!text.contains('\r'));
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cols.len(), 10);
    assert_eq!(&cols[..2], ["14", "-30"]);
    // shortest round-trip decimals
    let r = grid.records[0].response().unwrap();
    assert_eq!(
        cols[2].parse::<f64>().unwrap().to_bits(),
        r.eps_r.re.to_bits()
    );
    assert_eq!(cols[2], format!("{}", r.eps_r.re));
}

#[test]
fn failed_points_stay_on_their_rows() {
    let cfg = load_config(&data("pole_overlay.toml")).unwrap();
    let grid = run_sweep(&cfg).unwrap();
    assert_eq!(grid.records.len(), 21);
    for r in &grid.records {
        if r.omega_s_over_gamma == 0.0 {
            assert_eq!(r.label_text(), "ERROR_COHERENCE_POLE");
        } else {
            assert!(r.outcome.is_ok(), "{r:?}");
        }
    }
    let text = String::from_utf8(csv_bytes(&grid)).unwrap();
    assert_eq!(text.lines().count(), 22);
    assert!(text.contains("0,0,nan,nan,nan,nan,nan,nan,nan,ERROR_COHERENCE_POLE\n"));

    // the healthy overlays match a run that never saw the pole
    let healthy = run_sweep(&SweepConfig {
        omega_s: vec![14.0, 18.0],
        ..cfg.clone()
    })
    .unwrap();
    let kept: Vec<_> = grid
        .records
        .iter()
        .filter(|r| r.omega_s_over_gamma != 0.0)
        .cloned()
        .collect();
    assert_eq!(kept, healthy.records);
}

#[test]
fn infinite_fom_is_written_as_inf() {
    use eit_nri::sweep::SweepRecord;
    use eit_nri::{classify_point, response_from_material};
    use num_complex::Complex64;
    // lossless point: εr = μr = −1 gives n = −1 exactly
    let g = Complex64::new(-6.0, 0.0);
    let resp = response_from_material(g, g, 1.0).unwrap();
    let grid = SweepGrid {
        model: CoherenceModel::Printed,
        omega_s: vec![14.0],
        records: vec![SweepRecord {
            omega_s_over_gamma: 14.0,
            delta_p_over_gamma: 0.5,
            outcome: Ok((resp, classify_point(&resp, 100.0))),
        }],
    };
    let text = String::from_utf8(csv_bytes(&grid)).unwrap();
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "14,0.5,-1,0,-1,0,-1,0,inf,LEFT_HANDED_LOW_LOSS"
    );
}

fn compare_to_golden(model: CoherenceModel, file: &str) {
    let mut cfg = load_config(&data("coarse.toml")).unwrap();
    cfg.model = model;
    let text = String::from_utf8(csv_bytes(&run_sweep(&cfg).unwrap())).unwrap();
    let golden = std::fs::read_to_string(data(file)).unwrap();
    let (got, want): (Vec<&str>, Vec<&str>) = (text.lines().collect(), golden.lines().collect());
    assert_eq!(got.len(), want.len());
    assert_eq!(got[0], want[0]);
    for (k, (g, w)) in got.iter().zip(&want).enumerate().skip(1) {
        let (g, w): (Vec<&str>, Vec<&str>) = (g.split(',').collect(), w.split(',').collect());
        assert_eq!(g[9], w[9], "row {k} label");
        for c in 0..9 {
            let (a, b): (f64, f64) = (g[c].parse().unwrap(), w[c].parse().unwrap());
            let ok = a == b || (a - b).abs() <= 1e-12 * b.abs().max(1.0);
            assert!(ok, "row {k} column {c}: {a} vs {b}");
        }
    }
}

#[test]
fn coarse_printed_sweep_matches_golden_csv() {
    compare_to_golden(CoherenceModel::Printed, "sweep_coarse_printed.csv");
}

#[test]
fn coarse_corrected_sweep_matches_golden_csv() {
    compare_to_golden(CoherenceModel::Corrected, "sweep_coarse_corrected.csv");
}

#[test]
fn emitted_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = load_config(&data("coarse.toml")).unwrap();
    let grid = run_sweep(&cfg).unwrap();
    let csv = dir.path().join("out.csv");
    emit_csv(&grid, &csv).unwrap();
    assert_eq!(std::fs::read(&csv).unwrap(), csv_bytes(&grid));
    emit_csv(&run_sweep(&cfg).unwrap(), &csv).unwrap();
    assert_eq!(std::fs::read(&csv).unwrap(), csv_bytes(&grid));

    let dat = dir.path().join("out.dat");
    let script = emit_plotdata(&grid, &dat).unwrap();
    assert_eq!(script, dir.path().join("out.gp"));
    let text = std::fs::read_to_string(&dat).unwrap();
    assert_eq!(text, plot_text(&grid));
    let blocks: Vec<&str> = text
        .split("\n\n\n")
        .filter(|b| !b.trim().is_empty())
        .collect();
    assert_eq!(blocks.len(), OBSERVABLES.len() * 3);
    for block in &blocks {
        let rows: Vec<&str> = block.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows.len(), 61);
        assert!(rows.iter().all(|r| r.split(' ').count() == 2));
    }
    let gp = std::fs::read_to_string(script).unwrap();
    assert!(gp.contains("'out.dat' index 20 using 1:2"));
    assert!(gp.contains("fig5_fom.png"));
}

#[test]
fn emit_reports_the_path_on_failure() {
    let grid = run_sweep(&load_config(&data("coarse.toml")).unwrap()).unwrap();
    let bad = Path::new("/nonexistent-dir/out.csv");
    let err = emit_csv(&grid, bad).unwrap_err();
    assert!(
        err.to_string().contains("/nonexistent-dir/out.csv"),
        "{err}"
    );
}

#[test]
fn single_threaded_pool_works() {
    let cfg = SweepConfig {
        delta_p_steps: 11,
        ..SweepConfig::default()
    };
    let grid = run_sweep_with(&cfg, Some(1)).unwrap();
    assert_eq!(grid.records.len(), 33);
    assert_eq!(grid.model, CoherenceModel::Printed);
}
