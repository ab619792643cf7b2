use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use saotf_cli::commands::{
    self, EvalOutput, Manifest, ProbeOutput, WeightSweep, CONFIG_FILE, HISTORY_FILE, MANIFEST_FILE, MODEL_FILE,
    REPORT_FILE,
};
use saotf_cli::config::RunConfig;
use saotf_core::decode::{decode_grid, DecodeConfig, REPEAT_SEEDS};

const TINY: &[&str] = &[
    "vocab_size=400",
    "n_layer=1",
    "n_head=2",
    "n_embd=16",
    "block_size=32",
    "batch_size=2",
    "max_steps=4",
    "checkpoint_every=2",
    "eval_lines=3",
    "max_new=4",
];

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/minicorpus")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("saotf-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn tiny(extra: &[&str]) -> RunConfig {
    let overrides: Vec<String> = TINY.iter().chain(extra).map(|s| s.to_string()).collect();
    RunConfig::load(None, &overrides).unwrap()
}

fn saotf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_saotf")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn set_args() -> Vec<String> {
    TINY.iter().flat_map(|s| ["--set".to_string(), s.to_string()]).collect()
}

fn manifest(dir: &Path) -> Manifest {
    commands::load_artifact(&dir.join(MANIFEST_FILE)).unwrap()
}

fn check_manifest(dir: &Path, cfg: &RunConfig) {
    let m = manifest(dir);
    assert_eq!(m.provenance.config_hash, cfg.hash());
    assert_eq!(m.provenance.seed, cfg.seed);
    assert_eq!(m.provenance.tool, "saotf");
    assert_eq!(fs::read_to_string(dir.join(CONFIG_FILE)).unwrap(), cfg.resolved());
    for a in &m.artifacts {
        assert_eq!(commands::sha256_file(&dir.join(&a.file)).unwrap(), a.sha256, "{}", a.file);
    }
}

#[test]
fn pipeline_runs_end_to_end_through_the_binary() {
    let dir = scratch("pipeline");
    let data = dir.join("data");
    let run = dir.join("run");
    let sets = set_args();
    let with = |rest: &[&str]| -> Vec<String> { sets.iter().cloned().chain(rest.iter().map(|s| s.to_string())).collect() };
    let call = |args: Vec<String>| {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        saotf(&refs)
    };

    let (code, _, err) = call(with(&["preprocess", "--src", corpus().to_str().unwrap(), "--out", data.to_str().unwrap()]));
    assert_eq!(code, 0, "{err}");
    for f in ["train.bin", "valid.bin", "test.bin", "vocab.json", "literals.json", "train.code", "test.type"] {
        assert!(data.join(f).is_file(), "{f}");
    }
    check_manifest(&data, &tiny(&[]));

    let (code, _, err) = call(with(&["train", "--data", data.to_str().unwrap(), "--out", run.to_str().unwrap()]));
    assert_eq!(code, 0, "{err}");
    let history = fs::read_to_string(run.join(HISTORY_FILE)).unwrap();
    assert_eq!(history.lines().count(), 4);
    assert!(run.join("step000002.ckpt").is_file());
    check_manifest(&run, &tiny(&[]));

    let ckpt = run.join(MODEL_FILE);
    let input = dir.join("ctx.py");
    fs::write(&input, "def f(x):\n    return ").unwrap();
    let (code, out, err) = call(with(&[
        "complete",
        "--data",
        data.to_str().unwrap(),
        "--checkpoint",
        ckpt.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
        "--method",
        "top_k",
        "--k",
        "3",
        "--seed",
        "7",
    ]));
    assert_eq!(code, 0, "{err}");
    assert!(out.ends_with('\n') && !out.contains("<EOL>"));

    let eval = |name: &str| {
        let target = dir.join(name);
        let (code, _, err) = call(with(&[
            "eval",
            "--data",
            data.to_str().unwrap(),
            "--checkpoint",
            ckpt.to_str().unwrap(),
            "--out",
            target.to_str().unwrap(),
        ]));
        assert_eq!(code, 0, "{err}");
        fs::read(target.join(REPORT_FILE)).unwrap()
    };
    let first = eval("eval1");
    assert_eq!(first, eval("eval2"), "report.json must be byte-identical across reruns");
    let report: EvalOutput = serde_json::from_slice(&first).unwrap();
    assert_eq!(report.checkpoint_sha256, commands::sha256_file(&ckpt).unwrap());
    assert_eq!(report.report.counts.lines, 3);
    assert_eq!(report.options.decode.max_new, 4);
}

#[test]
fn exit_codes_distinguish_io_from_contract_errors() {
    let dir = scratch("exits");
    let cfg = tiny(&[]);
    let data = dir.join("data");
    commands::run_preprocess(&corpus(), &data, &cfg).unwrap();
    commands::run_train(&data, &dir.join("run"), &cfg).unwrap();
    let other = dir.join("other");
    commands::run_preprocess(&corpus(), &other, &tiny(&["vocab_size=420"])).unwrap();
    let ckpt = dir.join("run").join(MODEL_FILE);
    let d = data.to_str().unwrap();
    let missing = dir.join("missing");

    let (code, _, err) = saotf(&["train", "--data", missing.to_str().unwrap(), "--out", "x"]);
    assert_eq!(code, 2);
    let body: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(body["error"], "io");

    let (code, _, err) = saotf(&["train", "--data", d, "--out", "x", "--strategy", "mixed"]);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("invalid strategy"));

    let (code, _, err) = saotf(&[
        "eval",
        "--data",
        other.to_str().unwrap(),
        "--checkpoint",
        ckpt.to_str().unwrap(),
        "--out",
        dir.join("e").to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("vocabulary"), "{err}");

    let (code, _, _) = saotf(&["eval", "--data", d, "--checkpoint", missing.to_str().unwrap(), "--out", "x"]);
    assert_eq!(code, 2);
    let (code, _, _) = saotf(&["--set", "nope=1", "probe", "--glob", "x", "--out", "x"]);
    assert_eq!(code, 1);
    let (code, _, _) = saotf(&["frobnicate"]);
    assert_eq!(code, 1);
}

#[test]
fn every_strategy_trains_and_leaves_its_artifacts() {
    let dir = scratch("strategies");
    let data = dir.join("data");
    commands::run_preprocess(&corpus(), &data, &tiny(&[])).unwrap();
    for (strategy, extra) in [("hard", None), ("soft", Some("type_model.ckpt")), ("ift", Some("ift_phase1.ckpt")), ("code", None)] {
        let cfg = tiny(&[&format!("strategy={strategy}"), "weights=3:7"]);
        let out = dir.join(strategy);
        let summary = commands::run_train(&data, &out, &cfg).unwrap();
        assert_eq!(summary.steps, 4, "{strategy}");
        assert!(out.join(MODEL_FILE).is_file());
        if let Some(f) = extra {
            assert!(out.join(f).is_file(), "{strategy}: {f}");
        }
        check_manifest(&out, &cfg);
    }
}

#[test]
fn weight_sweep_emits_ten_rows_and_a_baseline() {
    let dir = scratch("sweepw");
    let cfg = tiny(&["max_steps=2", "eval_lines=1"]);
    let data = dir.join("data");
    commands::run_preprocess(&corpus(), &data, &cfg).unwrap();
    let out = dir.join("sweep");
    let sweep = commands::run_sweep_weights(&data, &out, &cfg).unwrap();
    let labels: Vec<&str> = sweep.rows.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels, ["no-weight", "1:9", "2:8", "3:7", "4:6", "5:5", "6:4", "7:3", "8:2", "9:1"]);
    assert_eq!(sweep.baseline.label, "code-only");
    let again: WeightSweep = commands::load_artifact(&out.join(commands::SWEEP_WEIGHTS_FILE)).unwrap();
    assert_eq!(again.rows.len(), 10);
    assert_eq!(again.provenance, sweep.provenance);
    check_manifest(&out, &cfg);
}

#[test]
fn decode_sweep_covers_every_grid_point() {
    let dir = scratch("sweepd");
    let cfg = tiny(&["eval_lines=2", "max_new=3"]);
    let data = dir.join("data");
    commands::run_preprocess(&corpus(), &data, &cfg).unwrap();
    commands::run_train(&data, &dir.join("run"), &cfg).unwrap();
    let sweep = commands::run_sweep_decode(&data, &dir.join("run").join(MODEL_FILE), &dir.join("sweep"), &cfg).unwrap();
    let expected = decode_grid(&DecodeConfig::default());
    assert_eq!(sweep.rows.len(), expected.len());
    for (row, want) in sweep.rows.iter().zip(&expected) {
        assert_eq!(row.label, want.label());
        let n = if want.method.is_stochastic() { REPEAT_SEEDS.len() } else { 1 };
        assert_eq!(row.em.values.len(), n, "{}", row.label);
        assert_eq!(row.es.values.len(), n, "{}", row.label);
    }
}

#[test]
fn probe_writes_report_and_summary_table() {
    let dir = scratch("probe");
    let pattern = format!("{}/hand_0*.py", corpus().display());
    let (code, out, err) = saotf(&["probe", "--glob", &pattern, "--checker", "grammar", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("| Files |"));
    let report: ProbeOutput = commands::load_artifact(&dir.join(commands::PROBE_REPORT_FILE)).unwrap();
    assert_eq!(report.files.len(), report.summary.files);
    assert!(report.summary.failed > 0 && report.summary.parsable > 0);
    assert_eq!(fs::read_to_string(dir.join(commands::PROBE_SUMMARY_FILE)).unwrap(), out);
}
