//! Regenerates the committed graph6 fixture files: every connected graph on
//! 1..=8 vertices, one canonical representative per isomorphism class, in a
//! deterministic order.
//!
//! Usage: gen-corpus [--out-dir DIR] [--max-n N]

use std::path::PathBuf;
use std::process::ExitCode;

use alpha_spectra::canon::connected_graphs;
use alpha_spectra::graph6;

fn main() -> ExitCode {
    let mut out_dir = PathBuf::from("crates/alpha-spectra/fixtures");
    let mut max_n = 8usize;
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--out-dir" => match args.next() {
                Some(v) => out_dir = PathBuf::from(v),
                None => return usage("--out-dir needs a value"),
            },
            "--max-n" => match args.next().and_then(|v| v.parse().ok()) {
                Some(v) => max_n = v,
                None => return usage("--max-n needs an integer"),
            },
            other => return usage(&format!("unknown argument {other:?}")),
        }
    }
    if max_n > 8 {
        eprintln!("error: enumeration is guarded to n <= 8");
        return ExitCode::from(3);
    }
    if let Err(e) = std::fs::create_dir_all(&out_dir) {
        eprintln!("error: cannot create {}: {e}", out_dir.display());
        return ExitCode::from(2);
    }
    for n in 1..=max_n {
        let graphs = connected_graphs(n);
        let mut lines = String::new();
        for g in &graphs {
            match graph6::encode(g) {
                Ok(line) => {
                    lines.push_str(&line);
                    lines.push('\n');
                }
                Err(e) => {
                    eprintln!("error: encoding n={n}: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        let path = out_dir.join(format!("conn{n}.g6"));
        if let Err(e) = std::fs::write(&path, lines) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
        println!("{}: {} graphs", path.display(), graphs.len());
    }
    ExitCode::SUCCESS
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("usage: gen-corpus [--out-dir DIR] [--max-n N]");
    ExitCode::from(2)
}
