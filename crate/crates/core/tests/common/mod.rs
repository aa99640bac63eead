//! Golden-file plumbing shared by the CLI tests and the acceptance runner.
//!
//! Set `QUIVER_BLESS=1` to rewrite the golden files from the current binary.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub const PROBLEMS: [&str; 5] = [
    "a2_line",
    "single_vertex_g2",
    "loop_g2",
    "a2_zero_map",
    "rank2_chain",
];

pub const SUBCOMMANDS: [&str; 6] = [
    "euler",
    "dim",
    "smooth",
    "walls",
    "oracle-verify",
    "stability",
];

pub const WINDOW: &str = "-1..1";

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn run_cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_quiver-moduli"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn args_for(problem: &str, sub: &str, json: bool) -> Vec<String> {
    let mut args = Vec::new();
    if json {
        args.push("--json".to_owned());
    }
    args.push(sub.to_owned());
    args.push(format!("tests/data/{problem}.json"));
    if sub == "walls" {
        args.push(format!("--window={WINDOW}"));
    }
    args
}

fn transcript(args: &[String], run: &Run) -> String {
    format!(
        "$ quiver-moduli {}\n[exit {}]\n{}{}",
        args.join(" "),
        run.code,
        run.stdout,
        run.stderr
    )
}

fn golden_path(problem: &str, sub: &str, json: bool) -> PathBuf {
    let ext = if json { "json.txt" } else { "txt" };
    manifest_dir()
        .join("tests/golden")
        .join(format!("{problem}.{sub}.{ext}"))
}

/// Runs one golden case; `Err` carries a description of the mismatch.
pub fn check_golden(problem: &str, sub: &str, json: bool) -> Result<Run, String> {
    let args = args_for(problem, sub, json);
    let argv: Vec<&str> = args.iter().map(String::as_str).collect();
    let run = run_cli(&argv);
    let got = transcript(&args, &run);
    let path = golden_path(problem, sub, json);
    if std::env::var_os("QUIVER_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &got).unwrap();
        return Ok(run);
    }
    let want = std::fs::read_to_string(&path).map_err(|e| {
        format!(
            "{}: {e} (run with QUIVER_BLESS=1 to create)",
            path.display()
        )
    })?;
    if want != got {
        return Err(format!(
            "{} differs:\n--- want\n{want}--- got\n{got}",
            path.display()
        ));
    }
    Ok(run)
}

fn s(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn need(text: &str, piece: &str) -> Result<(), String> {
    if text.contains(piece) {
        Ok(())
    } else {
        Err(format!("text output lacks {piece:?}"))
    }
}

/// Field-by-field agreement of the text report with its JSON mirror.
pub fn check_agreement(sub: &str, text: &str, json: &str) -> Result<(), String> {
    let v: Value = serde_json::from_str(json).map_err(|e| format!("invalid JSON: {e}"))?;
    match sub {
        "euler" => {
            need(text, &format!("chi = {}\n", v["chi"]))?;
            need(
                text,
                &format!("type {} genus {}", s(&v["type"]), v["genus"]),
            )?;
            for c in v["vertices"].as_array().unwrap() {
                let n = c["contribution"].as_i64().unwrap();
                need(text, &format!("vertex {}: {n:+}", s(&c["vertex"])))?;
            }
            for c in v["arrows"].as_array().unwrap() {
                let n = c["contribution"].as_i64().unwrap();
                need(
                    text,
                    &format!(
                        "arrow {} ({} -> {}): {:+}",
                        s(&c["arrow"]),
                        s(&c["tail"]),
                        s(&c["head"]),
                        -n
                    ),
                )?;
            }
        }
        "dim" => {
            need(text, &format!("expected dimension = {}\n", v["dimension"]))?;
            need(text, &format!("chi {}", v["chi"]))?;
        }
        "smooth" => {
            need(text, &format!("SMOOTH REGION: {}", s(&v["verdict"])))?;
            need(text, &format!("bound 2g-2 = {}", v["bound"]))?;
            for a in v["arrows"].as_array().unwrap() {
                need(text, &format!("{}: gap {}", s(&a["arrow"]), s(&a["gap"])))?;
            }
            for o in v["offending"].as_array().unwrap() {
                need(text, &s(o))?;
            }
        }
        "walls" => {
            for w in v["walls"].as_array().unwrap() {
                need(
                    text,
                    &format!("{} [witness {}]", s(&w["equation"]), s(&w["witness"])),
                )?;
            }
            need(text, &format!("{} degenerate", v["degenerate"]))?;
        }
        "oracle-verify" => {
            for r in v["instances"].as_array().unwrap() {
                let h: Vec<String> = r["H"].as_array().unwrap().iter().map(s).collect();
                let verdict = if r["pass"].as_bool().unwrap() {
                    "PASS"
                } else {
                    "FAIL"
                };
                need(
                    text,
                    &format!(
                        "{}: H=({}) chi={} {verdict}",
                        s(&r["label"]),
                        h.join(","),
                        r["chi"]
                    ),
                )?;
            }
            need(text, &format!("{}/{} pass", v["passed"], v["total"]))?;
        }
        "stability" => {
            need(text, &format!("{}\n", s(&v["verdict"])))?;
            need(text, &format!("slope {}", s(&v["slope"])))?;
        }
        other => return Err(format!("unknown subcommand {other}")),
    }
    Ok(())
}

/// Golden text + golden JSON + agreement for one (problem, subcommand).
pub fn check_case(problem: &str, sub: &str) -> Result<(), String> {
    let text = check_golden(problem, sub, false)?;
    let json = check_golden(problem, sub, true)?;
    if text.code != json.code {
        return Err(format!(
            "exit codes differ: text {} json {}",
            text.code, json.code
        ));
    }
    // Exit 2 is an input error with no report to compare.
    if text.code != 2 {
        check_agreement(sub, &text.stdout, &json.stdout)?;
    }
    Ok(())
}
