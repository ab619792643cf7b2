//! The `saotf` subcommands. Each writes its resolved config and a manifest
//! (provenance plus artifact digests) next to its outputs.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use saotf_core::align::{read_dataset, write_dataset, AlignedSample, Aligner};
use saotf_core::bpe::{train_bpe, word_counts, Vocab};
use saotf_core::corpus::{build, read_split, special_tokens, write_split, LiteralTables, Sample};
use saotf_core::decode::{complete_line, decode_grid, repeat_seeds, Completion, SeedStats, REPEAT_SEEDS};
use saotf_core::evaluate::{evaluate, score_lines, source_context, EvalOptions};
use saotf_core::metrics::{EvalReport, Evaluator, TokenClasses};
use saotf_core::model::{CheckpointMeta, Model};
use saotf_core::probe::{aggregate, scan_file, Checker, ProbeReport, ProbeSummary, Reason};
use saotf_core::trainer::{
    train_hard, train_ift, train_lm, train_soft, write_history, CorpusStream, Flow, Role, StepRecord, TaskWeights,
};
use saotf_core::{Error, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::{RunConfig, Strategy};

pub const TOOL: &str = "saotf";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const VOCAB_FILE: &str = "vocab.json";
pub const LITERALS_FILE: &str = "literals.json";
pub const MODEL_FILE: &str = "model.ckpt";
pub const TYPE_MODEL_FILE: &str = "type_model.ckpt";
pub const IFT_PHASE_ONE_FILE: &str = "ift_phase1.ckpt";
pub const HISTORY_FILE: &str = "history.jsonl";
pub const CONFIG_FILE: &str = "config.resolved";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const REPORT_FILE: &str = "report.json";
pub const PROBE_REPORT_FILE: &str = "probe_report.json";
pub const PROBE_SUMMARY_FILE: &str = "probe_summary.txt";
pub const SWEEP_WEIGHTS_FILE: &str = "sweep_weights.json";
pub const SWEEP_DECODE_FILE: &str = "sweep_decode.json";
pub const SPLITS: [&str; 3] = ["train", "valid", "test"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub config_hash: String,
    pub seed: u64,
}

impl Provenance {
    pub fn of(cfg: &RunConfig) -> Self {
        Provenance {
            tool: TOOL.into(),
            version: VERSION.into(),
            config_hash: cfg.hash(),
            seed: cfg.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    pub file: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub provenance: Provenance,
    pub command: String,
    pub artifacts: Vec<Artifact>,
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let mut hasher = Sha256::new();
    let mut f = fs::File::open(path)?;
    let mut buf = vec![0u8; 1 << 16];
    loop {
        let n = f.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Writes `config.resolved` and a manifest digesting `artifacts` (and the
/// config itself).
fn finish(out: &Path, cfg: &RunConfig, command: &str, artifacts: &[&str]) -> Result<()> {
    fs::write(out.join(CONFIG_FILE), cfg.resolved())?;
    let mut listed = Vec::new();
    for name in artifacts.iter().copied().chain([CONFIG_FILE]) {
        listed.push(Artifact {
            file: name.to_string(),
            sha256: sha256_file(&out.join(name))?,
        });
    }
    write_json(
        &out.join(MANIFEST_FILE),
        &Manifest {
            provenance: Provenance::of(cfg),
            command: command.into(),
            artifacts: listed,
        },
    )
}

/// Fails with a not-found I/O error naming `path` when it does not exist.
pub fn require(path: &Path) -> Result<()> {
    if path.exists() {
        Ok(())
    } else {
        Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("{}: no such file or directory", path.display()),
        )))
    }
}

fn python_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d)? {
            let path = entry?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "py") {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreprocessSummary {
    pub provenance: Provenance,
    pub files: SplitNames,
    pub excluded: Vec<String>,
    pub samples: [usize; 3],
    pub vocab_size: usize,
    pub vocab_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitNames {
    pub train: Vec<String>,
    pub valid: Vec<String>,
    pub test: Vec<String>,
}

pub const FILES_FILE: &str = "files.json";

/// Lexes every `.py` file under `src`, masks literals, splits, trains BPE
/// on the train split and writes the text corpus, vocabulary and aligned
/// binary datasets to `out`.
pub fn run_preprocess(src: &Path, out: &Path, cfg: &RunConfig) -> Result<PreprocessSummary> {
    let ratios = cfg.split_ratios()?;
    require(src)?;
    let paths = python_files(src)?;
    if paths.is_empty() {
        return Err(Error::Contract(format!("no .py files under {}", src.display())));
    }
    let mut sources = Vec::with_capacity(paths.len());
    for p in &paths {
        let name = p.strip_prefix(src).unwrap_or(p).to_string_lossy().replace('\\', "/");
        sources.push((name, fs::read_to_string(p)?));
    }
    let built = build(&sources, ratios, cfg.seed);
    fs::create_dir_all(out)?;
    let splits = [&built.split.train, &built.split.valid, &built.split.test];
    for (stem, samples) in SPLITS.iter().zip(splits) {
        write_split(out, stem, samples)?;
    }
    built.tables.write_json(&out.join(LITERALS_FILE))?;

    let counts = word_counts(built.split.train.iter().map(|s| s.code_tokens.as_slice()));
    let vocab = train_bpe(&counts, cfg.vocab_size, &special_tokens(&built.tables))?;
    vocab.save(&out.join(VOCAB_FILE))?;
    let hash = vocab.hash();
    let mut aligner = Aligner::new(&vocab);
    for (stem, samples) in SPLITS.iter().zip(splits) {
        let aligned = samples.iter().map(|s| aligner.align(s)).collect::<Result<Vec<_>>>()?;
        write_dataset(&out.join(format!("{stem}.bin")), &hash, &aligned)?;
    }

    let summary = PreprocessSummary {
        provenance: Provenance::of(cfg),
        files: SplitNames {
            train: built.files.train.clone(),
            valid: built.files.valid.clone(),
            test: built.files.test.clone(),
        },
        excluded: built.excluded.clone(),
        samples: [splits[0].len(), splits[1].len(), splits[2].len()],
        vocab_size: vocab.len(),
        vocab_hash: hash,
    };
    write_json(&out.join(FILES_FILE), &summary)?;
    let mut artifacts = vec![LITERALS_FILE, VOCAB_FILE, FILES_FILE];
    let names: Vec<String> = SPLITS
        .iter()
        .flat_map(|s| ["code", "type", "bin"].map(|ext| format!("{s}.{ext}")))
        .collect();
    artifacts.extend(names.iter().map(String::as_str));
    finish(out, cfg, "preprocess", &artifacts)?;
    Ok(summary)
}

/// Vocabulary, literal tables and splits produced by `preprocess`.
pub struct Dataset {
    pub dir: PathBuf,
    pub vocab: Vocab,
    pub tables: LiteralTables,
}

impl Dataset {
    pub fn open(dir: &Path) -> Result<Dataset> {
        for name in [VOCAB_FILE, LITERALS_FILE] {
            require(&dir.join(name))?;
        }
        Ok(Dataset {
            dir: dir.to_path_buf(),
            vocab: Vocab::load(&dir.join(VOCAB_FILE))?,
            tables: LiteralTables::read_json(&dir.join(LITERALS_FILE))?,
        })
    }

    pub fn aligned(&self, split: &str) -> Result<Vec<AlignedSample>> {
        let path = self.dir.join(format!("{split}.bin"));
        require(&path)?;
        read_dataset(&path, Some(&self.vocab.hash()))
    }

    pub fn samples(&self, split: &str) -> Result<Vec<Sample>> {
        read_split(&self.dir, split)
    }

    /// Loads a checkpoint and checks it was trained on this vocabulary.
    pub fn load_model(&self, checkpoint: &Path) -> Result<(Model<f32>, CheckpointMeta)> {
        require(checkpoint)?;
        let (model, meta) = Model::<f32>::load(checkpoint)?;
        let hash = self.vocab.hash();
        if meta.vocab_hash != hash {
            return Err(Error::Vocab(format!(
                "checkpoint {} was trained with vocabulary {} but the dataset uses {}",
                checkpoint.display(),
                meta.vocab_hash,
                hash
            )));
        }
        Ok((model, meta))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainSummary {
    pub strategy: String,
    pub steps: usize,
    pub final_record: Option<StepRecord>,
}

/// Trains a model on `data` with the configured strategy and writes the
/// final checkpoint, periodic checkpoints and `history.jsonl` to `out`.
pub fn run_train(data: &Path, out: &Path, cfg: &RunConfig) -> Result<TrainSummary> {
    let ds = Dataset::open(data)?;
    let train = ds.aligned("train")?;
    let tcfg = cfg.train_config()?;
    let mcfg = cfg.model_config(ds.vocab.len())?;
    fs::create_dir_all(out)?;
    let hash = ds.vocab.hash();
    let meta = |step: usize| CheckpointMeta {
        vocab_hash: hash.clone(),
        step: step as u64,
        seed: cfg.seed,
    };
    let mut d_code = CorpusStream::new(&train, Role::Code, mcfg.block_size, cfg.seed)?;
    let mut d_type = CorpusStream::new(&train, Role::Type, mcfg.block_size, cfg.seed)?;
    let mut model = Model::<f32>::init(mcfg, cfg.seed)?;

    let mut periodic: Vec<String> = Vec::new();
    let mut save_error: Option<Error> = None;
    let every = cfg.checkpoint_every;
    let mut hook = |r: &StepRecord, m: &Model<f32>| {
        let done = r.step + 1;
        if every > 0 && done.is_multiple_of(every) && done < tcfg.max_steps {
            let name = format!("step{done:06}.ckpt");
            match m.save(&out.join(&name), &meta(done)) {
                Ok(()) => periodic.push(name),
                Err(e) => {
                    save_error = Some(e);
                    return Flow::Stop;
                }
            }
        }
        Flow::Continue
    };

    let mut artifacts = vec![MODEL_FILE, HISTORY_FILE];
    let history = match cfg.strategy {
        Strategy::Hard => train_hard(&mut model, &mut d_code, &mut d_type, cfg.weights, &tcfg, &mut hook)?,
        Strategy::Code => train_lm(&mut model, &mut d_code, &tcfg, 0, &mut hook)?,
        Strategy::Ift => {
            let phase_one = out.join(IFT_PHASE_ONE_FILE);
            artifacts.push(IFT_PHASE_ONE_FILE);
            train_ift(&mut model, &mut d_type, &mut d_code, &tcfg, Some((&phase_one, &hash)), &mut hook)?
        }
        Strategy::Soft => {
            let mut type_model = Model::<f32>::init(mcfg, cfg.seed.wrapping_add(1))?;
            let h = train_soft(
                &mut model,
                &mut type_model,
                &mut d_code,
                &mut d_type,
                cfg.weights,
                &tcfg,
                true,
                &mut hook,
            )?;
            type_model.save(&out.join(TYPE_MODEL_FILE), &meta(h.len()))?;
            artifacts.push(TYPE_MODEL_FILE);
            h
        }
    };
    if let Some(e) = save_error {
        return Err(e);
    }
    model.save(&out.join(MODEL_FILE), &meta(history.len()))?;
    write_history(&out.join(HISTORY_FILE), &history)?;
    artifacts.extend(periodic.iter().map(String::as_str));
    finish(out, cfg, "train", &artifacts)?;
    Ok(TrainSummary {
        strategy: cfg.strategy.name().into(),
        steps: history.len(),
        final_record: history.last().cloned(),
    })
}

/// Completes the line that `source` ends in.
pub fn run_complete(data: &Path, checkpoint: &Path, source: &str, cfg: &RunConfig) -> Result<Completion> {
    let ds = Dataset::open(data)?;
    let (model, _) = ds.load_model(checkpoint)?;
    let ctx = source_context(source, &ds.tables, &ds.vocab);
    complete_line(&model, &ds.vocab, &ctx, &cfg.decode_config()?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalOutput {
    #[serde(flatten)]
    pub report: EvalReport,
    pub split: String,
    pub checkpoint_sha256: String,
    pub options: EvalOptions,
    pub provenance: Provenance,
}

/// Evaluates a checkpoint on one split and writes `report.json`.
pub fn run_eval(data: &Path, checkpoint: &Path, split: &str, out: &Path, cfg: &RunConfig) -> Result<EvalOutput> {
    if !SPLITS.contains(&split) {
        return Err(Error::Config(format!("unknown split {split:?}")));
    }
    let ds = Dataset::open(data)?;
    let (model, _) = ds.load_model(checkpoint)?;
    let opts = cfg.eval_options()?;
    let report = evaluate(&model, &ds.vocab, &ds.aligned(split)?, &ds.samples(split)?, &opts)?;
    let output = EvalOutput {
        report,
        split: split.into(),
        checkpoint_sha256: sha256_file(checkpoint)?,
        options: opts,
        provenance: Provenance::of(cfg),
    };
    fs::create_dir_all(out)?;
    write_json(&out.join(REPORT_FILE), &output)?;
    finish(out, cfg, "eval", &[REPORT_FILE])?;
    Ok(output)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeOutput {
    pub checker: Checker,
    pub pattern: String,
    pub summary: ProbeSummary,
    pub files: Vec<ProbeReport>,
    pub provenance: Provenance,
}

/// Scans every file matching `pattern` in parallel across files and writes
/// `probe_report.json` and `probe_summary.txt`.
pub fn run_probe(pattern: &str, out: &Path, cfg: &RunConfig) -> Result<ProbeOutput> {
    let mut paths = Vec::new();
    for entry in glob::glob(pattern).map_err(|e| Error::Config(format!("bad glob {pattern:?}: {e}")))? {
        let path = entry.map_err(|e| Error::Io(e.into()))?;
        if path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    if paths.is_empty() {
        return Err(Error::Contract(format!("no files match {pattern:?}")));
    }
    let sources = paths
        .iter()
        .map(|p| Ok((p.to_string_lossy().into_owned(), fs::read_to_string(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let reports = scan_parallel(&sources, cfg.checker);
    let summary = aggregate(&reports)?;
    let output = ProbeOutput {
        checker: cfg.checker,
        pattern: pattern.into(),
        summary,
        files: reports,
        provenance: Provenance::of(cfg),
    };
    fs::create_dir_all(out)?;
    write_json(&out.join(PROBE_REPORT_FILE), &output)?;
    fs::write(out.join(PROBE_SUMMARY_FILE), probe_table(&output))?;
    finish(out, cfg, "probe", &[PROBE_REPORT_FILE, PROBE_SUMMARY_FILE])?;
    Ok(output)
}

fn scan_parallel(sources: &[(String, String)], checker: Checker) -> Vec<ProbeReport> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(sources.len());
    if workers <= 1 {
        return sources.iter().map(|(n, s)| scan_file(n, s, checker)).collect();
    }
    let chunk = sources.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = sources
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|(n, s)| scan_file(n, s, checker)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("probe worker panicked"))
            .collect()
    })
}

/// One-table text summary of a probe run.
pub fn probe_table(p: &ProbeOutput) -> String {
    let s = &p.summary;
    let mut t = String::new();
    let _ = writeln!(t, "Checker: {}", p.checker);
    let _ = writeln!(t, "| Files | Executions | Successful | Failed | Successful % | Failed % |");
    let _ = writeln!(t, "|------:|-----------:|-----------:|-------:|-------------:|---------:|");
    let _ = writeln!(
        t,
        "| {} | {} | {} | {} | {:.2} | {:.2} |",
        s.files, s.total_chars, s.parsable, s.failed, s.success_pct, s.failure_pct
    );
    for r in Reason::ALL {
        if let Some(pct) = s.reason_pct.get(&r) {
            let _ = writeln!(t, "  {r}: {pct:.2}%");
        }
    }
    t
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightRow {
    pub label: String,
    pub alpha_type: f64,
    pub alpha_code: f64,
    pub token_accuracy: f64,
    pub mrr: f64,
    pub em: f64,
    pub es: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightSweep {
    pub rows: Vec<WeightRow>,
    /// Single-task code model trained with the same budget.
    pub baseline: WeightRow,
    pub provenance: Provenance,
}

fn weight_row(label: &str, w: Option<TaskWeights>, r: &EvalReport) -> WeightRow {
    WeightRow {
        label: label.into(),
        alpha_type: w.map_or(0.0, |w| w.alpha_type),
        alpha_code: w.map_or(1.0, |w| w.alpha_code),
        token_accuracy: r.token_accuracy,
        mrr: r.mrr,
        em: r.em,
        es: r.es,
    }
}

/// Trains one hard-sharing model per weight setting (no-weight, 1:9 … 9:1)
/// plus a code-only baseline and scores each on the test split.
pub fn run_sweep_weights(data: &Path, out: &Path, cfg: &RunConfig) -> Result<WeightSweep> {
    let ds = Dataset::open(data)?;
    let train = ds.aligned("train")?;
    let test = ds.aligned("test")?;
    let test_samples = ds.samples("test")?;
    let tcfg = cfg.train_config()?;
    let mcfg = cfg.model_config(ds.vocab.len())?;
    let opts = cfg.eval_options()?;
    let streams = || -> Result<(CorpusStream, CorpusStream)> {
        Ok((
            CorpusStream::new(&train, Role::Code, mcfg.block_size, cfg.seed)?,
            CorpusStream::new(&train, Role::Type, mcfg.block_size, cfg.seed)?,
        ))
    };
    let mut rows = Vec::new();
    for (label, weights) in TaskWeights::sweep_grid() {
        let (mut d_code, mut d_type) = streams()?;
        let mut model = Model::<f32>::init(mcfg, cfg.seed)?;
        train_hard(&mut model, &mut d_code, &mut d_type, weights, &tcfg, &mut |_: &StepRecord, _: &Model<f32>| Flow::Continue)?;
        let report = evaluate(&model, &ds.vocab, &test, &test_samples, &opts)?;
        rows.push(weight_row(&label, Some(weights), &report));
    }
    let (mut d_code, _) = streams()?;
    let mut model = Model::<f32>::init(mcfg, cfg.seed)?;
    train_lm(&mut model, &mut d_code, &tcfg, 0, &mut |_: &StepRecord, _: &Model<f32>| Flow::Continue)?;
    let baseline = weight_row("code-only", None, &evaluate(&model, &ds.vocab, &test, &test_samples, &opts)?);
    let sweep = WeightSweep {
        rows,
        baseline,
        provenance: Provenance::of(cfg),
    };
    fs::create_dir_all(out)?;
    write_json(&out.join(SWEEP_WEIGHTS_FILE), &sweep)?;
    finish(out, cfg, "sweep weights", &[SWEEP_WEIGHTS_FILE])?;
    Ok(sweep)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodeRow {
    pub label: String,
    pub config: saotf_core::decode::DecodeConfig,
    pub em: SeedStats,
    pub es: SeedStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodeSweep {
    pub lines: usize,
    pub rows: Vec<DecodeRow>,
    pub checkpoint_sha256: String,
    pub provenance: Provenance,
}

/// Line-level EM/ES for greedy, sampling and every point of the beam,
/// temperature, top-k and top-p grids; stochastic methods are repeated
/// over five seeds.
pub fn run_sweep_decode(data: &Path, checkpoint: &Path, out: &Path, cfg: &RunConfig) -> Result<DecodeSweep> {
    let ds = Dataset::open(data)?;
    let (model, _) = ds.load_model(checkpoint)?;
    let samples = ds.samples("test")?;
    let base = cfg.decode_config()?;
    let mut rows = Vec::new();
    for dcfg in decode_grid(&base) {
        let mut es_values = Vec::new();
        let em = repeat_seeds(&dcfg, &REPEAT_SEEDS, |c| {
            let opts = EvalOptions {
                decode: *c,
                lines: cfg.eval_lines,
                seed: cfg.seed,
            };
            let mut ev = Evaluator::new(TokenClasses::for_vocab(&ds.vocab));
            score_lines(&model, &ds.vocab, &samples, &opts, &mut ev)?;
            let r = ev.report();
            es_values.push(r.es);
            Ok(r.em)
        })?;
        let es = SeedStats::from_values(em.seeds.clone(), es_values);
        rows.push(DecodeRow {
            label: dcfg.label(),
            config: dcfg,
            em,
            es,
        });
    }
    let sweep = DecodeSweep {
        lines: cfg.eval_lines,
        rows,
        checkpoint_sha256: sha256_file(checkpoint)?,
        provenance: Provenance::of(cfg),
    };
    fs::create_dir_all(out)?;
    write_json(&out.join(SWEEP_DECODE_FILE), &sweep)?;
    finish(out, cfg, "sweep decode", &[SWEEP_DECODE_FILE])?;
    Ok(sweep)
}

/// Reads back any JSON artifact written by these commands.
pub fn load_artifact<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    read_json(path)
}
