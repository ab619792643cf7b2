//! Acceptance suite: one PASS/FAIL line per criterion, with its runtime.
//!
//! Run with `cargo test --test acceptance`. The process exits non-zero when
//! any criterion fails.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::rc::Rc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saotf_cli::commands;
use saotf_cli::config::RunConfig;
use saotf_core::align::{AlignedSample, Aligner};
use saotf_core::autodiff::{grad_check, Graph, Tensor, Var};
use saotf_core::bpe::{train_bpe, word_counts, Vocab};
use saotf_core::corpus::{build, special_tokens, BuiltCorpus, Sample, SplitRatios};
use saotf_core::decode::{
    beam_search, complete_ids, decode_grid, nucleus, pick, DecodeConfig, LanguageModel, Method, BEAM_GRID,
    REPEAT_SEEDS, TEMPERATURE_GRID, TOP_K_GRID, TOP_P_GRID,
};
use saotf_core::fixtures;
use saotf_core::lexer::tokenize;
use saotf_core::metrics::{edit_similarity, levenshtein, mrr, reciprocal_rank, MRR_CUTOFF};
use saotf_core::model::{Batch, Model, ModelConfig};
use saotf_core::probe::{check_prefix, Checker};
use saotf_core::trainer::{
    parameter_distance, sharing_loss, train_hard, train_lm, train_soft, CorpusStream, Flow, Role, StepRecord,
    TaskWeights, TrainConfig,
};
use serde::Deserialize;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn repo() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus_dir() -> PathBuf {
    repo().join("data/minicorpus")
}

fn corpus() -> Vec<(String, String)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "py"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("saotf-acceptance-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Corpus split, vocabulary and aligned train samples at one vocab size.
struct Prepared {
    built: BuiltCorpus,
    vocab: Vocab,
    train: Vec<AlignedSample>,
}

fn prepare(vocab_size: usize, ratios: SplitRatios) -> Prepared {
    let built = build(&corpus(), ratios, 0);
    let counts = word_counts(built.split.train.iter().map(|s| s.code_tokens.as_slice()));
    let vocab = train_bpe(&counts, vocab_size, &special_tokens(&built.tables)).unwrap();
    let mut aligner = Aligner::new(&vocab);
    let train = built.split.train.iter().map(|s| aligner.align(s).unwrap()).collect();
    Prepared { built, vocab, train }
}

// ---------------------------------------------------------------- lexer

fn lexer_golden() -> Check {
    let records = fixtures::load(&repo().join("data/fixtures.json")).map_err(|e| e.to_string())?;
    let files = corpus();
    ensure(files.len() >= 200, || format!("only {} corpus files", files.len()))?;
    ensure(records.len() == files.len(), || format!("{} fixtures for {} files", records.len(), files.len()))?;
    let mut tokens = 0;
    for (record, (name, source)) in records.iter().zip(&files) {
        ensure(&record.file == name, || format!("fixture {} paired with {name}", record.file))?;
        fixtures::check(record, source).map_err(|m| format!("{name}: {m:?}"))?;
        tokens += record.tokens.as_ref().map_or(0, Vec::len);
    }
    Ok(format!("{} files, {tokens} tokens identical", files.len()))
}

// ------------------------------------------------------------ alignment

fn fuzz_snippet(rng: &mut ChaCha8Rng) -> String {
    const PIECES: &[&str] = &[
        "x", "foo_bar", "λ", "données", "_", "if", "else", "def", "return", "class", "for", "in", "lambda", "0",
        "42", "3.14", "0x1f", "1e-3", "'a'", "\"s t\"", "'''doc'''", "f'{x}'", "(", ")", "[", "]", "{", "}", ":",
        ",", ".", "+", "-", "*", "**", "//", "==", "!=", "<=", ">>=", "->", "@", "...", "~", "'open", "$", "?",
        "\\", "#c",
    ];
    let mut s = String::new();
    let lines = rng.gen_range(1..6);
    for _ in 0..lines {
        s.push_str(&" ".repeat(4 * rng.gen_range(0..3)));
        for _ in 0..rng.gen_range(1..9) {
            s.push_str(PIECES[rng.gen_range(0..PIECES.len())]);
            if rng.gen_bool(0.6) {
                s.push(' ');
            }
        }
        s.push('\n');
    }
    s
}

/// Length equality, type projection back to the word-level type
/// sequence, and word recovery from each subword span.
fn check_alignment(sample: &Sample, aligned: &AlignedSample, vocab: &Vocab) -> std::result::Result<(), String> {
    ensure(aligned.code_ids.len() == aligned.type_ids.len(), || {
        format!("{} code ids vs {} type ids", aligned.code_ids.len(), aligned.type_ids.len())
    })?;
    ensure(aligned.boundaries.len() == sample.code_tokens.len(), || "one span per word".into())?;
    let projected: Vec<&str> = aligned.project_types().iter().map(|&id| vocab.token(id).unwrap()).collect();
    ensure(projected == sample.type_tokens, || "type projection does not recover the type sequence".into())?;
    let mut expected_start = 0;
    for (&(s, e), word) in aligned.boundaries.iter().zip(&sample.code_tokens) {
        ensure(s == expected_start && e > s, || format!("span ({s},{e}) not contiguous"))?;
        expected_start = e;
        ensure(aligned.type_ids[s..e].iter().all(|&t| t == aligned.type_ids[s]), || "type id varies in a span".into())?;
        let ids = &aligned.code_ids[s..e];
        if !ids.contains(&vocab.unk_id()) {
            let words = vocab.decode_words(ids).map_err(|e| e.to_string())?;
            ensure(words == [word.clone()], || format!("span decodes to {words:?}, expected {word:?}"))?;
        }
    }
    ensure(expected_start == aligned.len(), || "spans do not cover the sequence".into())
}

fn alignment_invariant() -> Check {
    let p = prepare(1024, SplitRatios::default());
    let mut aligner = Aligner::new(&p.vocab);
    let mut corpus_samples = 0;
    for s in p.built.split.train.iter().chain(&p.built.split.valid).chain(&p.built.split.test) {
        let a = aligner.align(s).map_err(|e| e.to_string())?;
        check_alignment(s, &a, &p.vocab)?;
        corpus_samples += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..1000 {
        let src = fuzz_snippet(&mut rng);
        let sample = Sample::from_tokens(&tokenize(&src), &p.built.tables);
        let a = aligner.align(&sample).map_err(|e| format!("fuzz {i}: {e}"))?;
        check_alignment(&sample, &a, &p.vocab).map_err(|e| format!("fuzz {i} {src:?}: {e}"))?;
    }
    Ok(format!("{corpus_samples} corpus samples + 1000 fuzz snippets"))
}

// ------------------------------------------------------------ gradients

const GRAD_STEP: f64 = 1e-3;
const GRAD_TOL: f64 = 1e-4;
const GRAD_COORDS: usize = 200;

fn rand_tensor(rng: &mut ChaCha8Rng, shape: &[usize], scale: f64) -> Tensor<f64> {
    let n = shape.iter().product();
    Tensor::new(shape.to_vec(), (0..n).map(|_| scale * rng.gen_range(-1.0..1.0)).collect()).unwrap()
}

fn project(g: &mut Graph<f64>, out: Var, seed: u64) -> saotf_core::Result<Var> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xface);
    let w = rand_tensor(&mut rng, g.shape(out), 1.0);
    let w = g.constant(w);
    let prod = g.mul(out, w)?;
    Ok(g.sum(prod))
}

type LossFn = Box<dyn Fn(&mut Graph<f64>, &[Var]) -> saotf_core::Result<Var>>;

fn op_cases() -> Vec<(&'static str, Vec<Tensor<f64>>, LossFn)> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let r = |rng: &mut ChaCha8Rng, shape: &[usize]| rand_tensor(rng, shape, 1.0);
    let a = r(&mut rng, &[4, 6, 10]);
    let b = r(&mut rng, &[4, 6, 10]);
    let mat_a = r(&mut rng, &[12, 20]);
    let mat_b = r(&mut rng, &[20, 12]);
    let mat_bt = r(&mut rng, &[12, 20]);
    let g_a = r(&mut rng, &[3, 8, 10]);
    let g_b = r(&mut rng, &[3, 10, 8]);
    let g_bt = r(&mut rng, &[3, 8, 10]);
    let bias = r(&mut rng, &[6, 10]);
    let positive = Tensor::new(a.shape().to_vec(), a.data().iter().map(|v| v.abs() + 0.5).collect()).unwrap();
    // GELU' vanishes near x = -0.7518, where the step-1e-3 truncation error
    // dominates a relative comparison; inputs keep 0.15 away from it.
    let wide = Tensor::new(
        a.shape().to_vec(),
        a.data()
            .iter()
            .map(|v| {
                let x = 3.0 * v;
                if (x + 0.7518).abs() < 0.15 { x + 0.3 } else { x }
            })
            .collect(),
    )
    .unwrap();
    let ln_x = r(&mut rng, &[20, 12]);
    let gamma = r(&mut rng, &[12]);
    let beta = r(&mut rng, &[12]);
    let table = r(&mut rng, &[30, 10]);
    let ids: Vec<u32> = (0..25).map(|_| rng.gen_range(0..30)).collect();
    let logits = r(&mut rng, &[20, 15]);
    let mut targets: Vec<Option<u32>> = (0..20).map(|_| Some(rng.gen_range(0..15))).collect();
    targets[3] = None;
    let rows_a = r(&mut rng, &[9, 12]);
    let rows_b = r(&mut rng, &[8, 12]);
    let scores = r(&mut rng, &[4, 8, 8]);
    let mask: Rc<[bool]> = (0..64).map(|i| i % 8 > i / 8).collect();
    let heads = r(&mut rng, &[2 * 6, 4 * 5]);
    let share_a = r(&mut rng, &[10, 12]);
    let share_b = r(&mut rng, &[10, 12]);
    let share_c = r(&mut rng, &[40]);
    let share_d = r(&mut rng, &[40]);

    macro_rules! case {
        ($name:expr, [$($p:expr),*], |$g:ident, $v:ident| $body:expr) => {
            ($name, vec![$($p.clone()),*], Box::new(move |$g: &mut Graph<f64>, $v: &[Var]| $body) as LossFn)
        };
    }
    vec![
        case!("matmul", [mat_a, mat_b], |g, p| { let y = g.matmul(p[0], p[1])?; project(g, y, 1) }),
        case!("matmul_nt", [mat_a, mat_bt], |g, p| { let y = g.matmul_nt(p[0], p[1])?; project(g, y, 2) }),
        case!("bmm", [g_a, g_b], |g, p| { let y = g.bmm(p[0], p[1])?; project(g, y, 3) }),
        case!("bmm_nt", [g_a, g_bt], |g, p| { let y = g.bmm_nt(p[0], p[1])?; project(g, y, 4) }),
        case!("transpose", [a], |g, p| { let y = g.transpose(p[0])?; project(g, y, 5) }),
        case!("add", [a, b], |g, p| { let y = g.add(p[0], p[1])?; project(g, y, 6) }),
        case!("add (broadcast)", [a, bias], |g, p| { let y = g.add(p[0], p[1])?; project(g, y, 7) }),
        case!("sub", [a, b], |g, p| { let y = g.sub(p[0], p[1])?; project(g, y, 8) }),
        case!("mul", [a, b], |g, p| { let y = g.mul(p[0], p[1])?; project(g, y, 9) }),
        case!("scale", [a], |g, p| { let y = g.scale(p[0], -1.7); project(g, y, 10) }),
        case!("add_scalar", [a], |g, p| { let y = g.add_scalar(p[0], 0.3); project(g, y, 11) }),
        case!("sum", [a], |g, p| { let y = g.mul(p[0], p[0])?; let s = g.sum(y); Ok(g.scale(s, 0.7)) }),
        case!("sqrt", [positive], |g, p| { let y = g.sqrt(p[0]); project(g, y, 12) }),
        case!("gelu", [wide], |g, p| { let y = g.gelu(p[0]); project(g, y, 13) }),
        case!("softmax", [a], |g, p| { let y = g.softmax(p[0]); project(g, y, 14) }),
        case!("layer_norm", [ln_x, gamma, beta], |g, p| { let y = g.layer_norm(p[0], p[1], p[2])?; project(g, y, 15) }),
        case!("embedding", [table], |g, p| { let y = g.embedding(p[0], &ids)?; project(g, y, 16) }),
        case!("cross_entropy", [logits], |g, p| g.cross_entropy(p[0], &targets)),
        case!("concat_rows", [rows_a, rows_b], |g, p| { let y = g.concat_rows(&[p[0], p[1], p[0]])?; project(g, y, 17) }),
        case!("masked_fill", [scores], |g, p| {
            let y = g.masked_fill(p[0], mask.clone(), -1e9)?;
            let y = g.softmax(y);
            project(g, y, 18)
        }),
        case!("dropout", [a], |g, p| {
            let mut drop_rng = ChaCha8Rng::seed_from_u64(5);
            let y = g.dropout(p[0], 0.3, &mut drop_rng);
            project(g, y, 19)
        }),
        case!("split_heads/merge_heads", [heads], |g, p| {
            let y = g.split_heads(p[0], 2, 6, 4)?;
            let k = g.transpose(y)?;
            let att = g.bmm(y, k)?;
            let y = g.bmm(att, y)?;
            let y = g.merge_heads(y, 2, 6, 4)?;
            project(g, y, 20)
        }),
        case!("sharing_loss", [share_a, share_c, share_b, share_d], |g, p| sharing_loss(g, &[p[0], p[1]], &[p[2], p[3]])),
    ]
}

fn gradient_correctness() -> Check {
    let mut worst = 0.0f64;
    let mut names = Vec::new();
    for (name, params, f) in op_cases() {
        let total: usize = params.iter().map(Tensor::len).sum();
        ensure(total >= GRAD_COORDS, || format!("{name}: only {total} coordinates"))?;
        let report = grad_check(&f, &params, GRAD_STEP, GRAD_TOL, Some(GRAD_COORDS), 7).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.checked == GRAD_COORDS, || format!("{name}: checked {}", report.checked))?;
        ensure(report.passed(), || {
            format!(
                "{name}: max relative error {:e} at {:?} (analytic {:e}, numeric {:e})",
                report.max_rel_error, report.worst, report.worst_values.0, report.worst_values.1
            )
        })?;
        worst = worst.max(report.max_rel_error);
        names.push(name);
    }
    let cfg = ModelConfig { n_layer: 2, n_head: 2, n_embd: 8, block_size: 16, vocab_size: 16, dropout: 0.0 };
    for seed in 0..3 {
        let m = Model::<f64>::init(cfg, seed).map_err(|e| e.to_string())?;
        let mut params = m.params().to_vec();
        // Evaluate away from the near-degenerate 0.02-std embedding init
        // (see the model unit tests): embeddings rescaled to std 0.5.
        for t in &mut params[..2] {
            for v in t.data_mut() {
                *v *= 25.0;
            }
        }
        let ids: &[u32] = &[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5];
        let batch = Batch::from_windows(&[ids, &ids[..6]]).map_err(|e| e.to_string())?;
        let report = grad_check(|g, p| m.batch_loss(g, p, &batch, None), &params, GRAD_STEP, GRAD_TOL, Some(GRAD_COORDS), seed)
            .map_err(|e| e.to_string())?;
        ensure(report.checked == GRAD_COORDS && report.passed(), || format!("model loss seed {seed}: {report:?}"))?;
        worst = worst.max(report.max_rel_error);
    }
    Ok(format!("{} ops + full model loss (3 seeds), {GRAD_COORDS} coords each, max rel err {worst:.2e}", names.len()))
}

// -------------------------------------------------------------- overfit

fn training_accuracy(model: &Model<f32>, windows: &[Vec<u32>]) -> f64 {
    let v = model.config().vocab_size;
    let (mut hits, mut total) = (0usize, 0usize);
    for w in windows {
        let logits = model.forward(w).unwrap();
        let rows = logits.data();
        for i in 0..w.len() - 1 {
            let row = &rows[i * v..(i + 1) * v];
            let best = (0..v).fold(0, |b, j| if row[j] > row[b] { j } else { b });
            hits += usize::from(best as u32 == w[i + 1]);
            total += 1;
        }
    }
    100.0 * hits as f64 / total as f64
}

fn overfit_sanity() -> Check {
    const VOCAB: usize = 1024;
    const SAMPLES: usize = 32;
    const WINDOW: usize = 64;
    let p = prepare(VOCAB, SplitRatios { train: 1.0, valid: 0.0 });
    let all = CorpusStream::new(&p.train, Role::Code, WINDOW, 0).map_err(|e| e.to_string())?;
    let windows: Vec<Vec<u32>> = all.windows().iter().filter(|w| w.len() == WINDOW).take(SAMPLES).cloned().collect();
    ensure(windows.len() == SAMPLES, || "not enough full windows".into())?;
    let mut stream = CorpusStream::from_windows(windows.clone(), Role::Code, 0).map_err(|e| e.to_string())?;
    let cfg = ModelConfig { dropout: 0.0, ..ModelConfig::desk(p.vocab.len()) };
    ensure(cfg.n_layer == 4 && cfg.n_embd == 128, || format!("not the desk model: {cfg:?}"))?;
    let mut model = Model::<f32>::init(cfg, 0).map_err(|e| e.to_string())?;
    let train = TrainConfig {
        learning_rate: 1e-3,
        weight_decay: 0.0,
        batch_size: SAMPLES,
        grad_accum_steps: 1,
        max_steps: 2000,
        seed: 0,
    };
    let mut reached: Option<(usize, f64)> = None;
    let mut hook = |r: &StepRecord, m: &Model<f32>| {
        if (r.step + 1).is_multiple_of(10) {
            let acc = training_accuracy(m, &windows);
            if acc >= 95.0 {
                reached = Some((r.step + 1, acc));
                return Flow::Stop;
            }
        }
        Flow::Continue
    };
    let history = train_lm(&mut model, &mut stream, &train, 0, &mut hook).map_err(|e| e.to_string())?;
    let initial = history[0].l_code.unwrap();
    let ln_v = (p.vocab.len() as f64).ln();
    let rel = (initial - ln_v).abs() / ln_v;
    ensure(rel <= 0.2, || format!("initial loss {initial:.3} vs ln V {ln_v:.3} ({:.1}% off)", 100.0 * rel))?;
    let (steps, acc) = reached.ok_or_else(|| {
        format!("accuracy {:.2}% after 2000 steps", training_accuracy(&model, &windows))
    })?;
    Ok(format!(
        "L4/E128, V={}, {SAMPLES}x{WINDOW} tokens: {acc:.2}% at step {steps}; initial loss {initial:.3} vs ln V {ln_v:.3}",
        p.vocab.len()
    ))
}

// ----------------------------------------------------------- strategies

fn strategy_equivalences() -> Check {
    let p = prepare(512, SplitRatios::default());
    let cfg = ModelConfig { n_layer: 2, n_head: 2, n_embd: 32, block_size: 32, vocab_size: p.vocab.len(), dropout: 0.1 };
    let stream = |role| CorpusStream::new(&p.train, role, cfg.block_size, 1).unwrap();
    let train = |steps| TrainConfig { learning_rate: 1e-3, weight_decay: 0.01, batch_size: 4, grad_accum_steps: 2, max_steps: steps, seed: 1 };
    let quiet = |_: &StepRecord, _: &Model<f32>| Flow::Continue;

    let mut single = Model::<f32>::init(cfg, 3).unwrap();
    let mut hard = single.clone();
    let h1 = train_lm(&mut single, &mut stream(Role::Code), &train(40), 0, &mut { quiet }).map_err(|e| e.to_string())?;
    let w = TaskWeights::new(0.0, 1.0).map_err(|e| e.to_string())?;
    let h2 = train_hard(&mut hard, &mut stream(Role::Code), &mut stream(Role::Type), w, &train(40), &mut { quiet })
        .map_err(|e| e.to_string())?;
    let bitwise_params = single
        .params()
        .iter()
        .zip(hard.params())
        .all(|(a, b)| a.data().iter().zip(b.data()).all(|(x, y)| x.to_bits() == y.to_bits()));
    let bitwise_losses = h1.iter().zip(&h2).all(|(a, b)| a.l_code.unwrap().to_bits() == b.l_code.unwrap().to_bits());
    ensure(bitwise_params && bitwise_losses && h1.len() == h2.len(), || "alpha_type=0 diverges from single-task".into())?;

    let m = Model::<f32>::init(cfg, 4).unwrap();
    let mut g = Graph::new();
    let va = m.bind(&mut g, true);
    let vb = m.bind(&mut g, true);
    let ls = sharing_loss(&mut g, &va, &vb).map_err(|e| e.to_string())?;
    let self_loss = g.value(ls).data()[0] as f64;
    ensure(self_loss <= 1e-6, || format!("sharing_loss(w,w) = {self_loss:e}"))?;

    let mut mc = Model::<f32>::init(cfg, 10).unwrap();
    let mut mt = Model::<f32>::init(cfg, 11).unwrap();
    let d0 = parameter_distance(mc.params(), mt.params()).map_err(|e| e.to_string())?;
    let soft_cfg = TrainConfig { batch_size: 2, grad_accum_steps: 1, ..train(500) };
    train_soft(&mut mc, &mut mt, &mut stream(Role::Code), &mut stream(Role::Type), TaskWeights::no_weight(), &soft_cfg, true, &mut { quiet })
        .map_err(|e| e.to_string())?;
    let d500 = parameter_distance(mc.params(), mt.params()).map_err(|e| e.to_string())?;
    ensure(d500 < d0, || format!("distance at step 500 {d500:.4} not below step 0 {d0:.4}"))?;
    Ok(format!(
        "hard(alpha_type=0) bitwise == single-task over {} steps; sharing_loss(w,w) = {self_loss:.1e}; soft distance {d0:.3} -> {d500:.3}",
        h1.len()
    ))
}

// ------------------------------------------------------------- decoding

struct Toy {
    vocab: usize,
    seed: u64,
}

impl LanguageModel for Toy {
    fn vocab_size(&self) -> usize {
        self.vocab
    }
    fn context_limit(&self) -> usize {
        usize::MAX
    }
    fn next_distribution(&self, ctx: &[u32]) -> saotf_core::Result<Vec<f64>> {
        let mut h = DefaultHasher::new();
        (self.seed, ctx).hash(&mut h);
        let mut rng = ChaCha8Rng::seed_from_u64(h.finish());
        let raw: Vec<f64> = (0..self.vocab).map(|_| rng.gen::<f64>() + 0.05).collect();
        let total: f64 = raw.iter().sum();
        Ok(raw.into_iter().map(|x| x / total).collect())
    }
}

/// Highest-probability id string by enumeration of every string with EOL
/// only in last position and length ≤ `max_new`; EOL-terminated strings
/// beat unterminated ones, ties go to the lexicographically smaller string.
fn enumerate_best(m: &dyn LanguageModel, ctx: &[u32], eol: u32, max_new: usize) -> (Vec<u32>, f64, bool) {
    let v = m.vocab_size() as u32;
    let mut best: [Option<(Vec<u32>, f64)>; 2] = [None, None];
    let mut stack: Vec<(Vec<u32>, f64)> = vec![(Vec::new(), 0.0)];
    while let Some((ids, lp)) = stack.pop() {
        let mut seq = ctx.to_vec();
        seq.extend(&ids);
        let dist = m.next_distribution(&seq).unwrap();
        for t in 0..v {
            let mut next = ids.clone();
            next.push(t);
            let nlp = lp + dist[t as usize].ln();
            let slot = if t == eol {
                0
            } else if next.len() == max_new {
                1
            } else {
                stack.push((next, nlp));
                continue;
            };
            let better = match &best[slot] {
                None => true,
                Some((bids, blp)) => nlp > *blp || (nlp == *blp && next < *bids),
            };
            if better {
                best[slot] = Some((next, nlp));
            }
        }
    }
    match best {
        [Some((ids, lp)), _] => (ids, lp, true),
        [None, Some((ids, lp))] => (ids, lp, false),
        _ => unreachable!(),
    }
}

/// Upper 0.001 critical values of the chi-square distribution.
fn chi2_critical(df: usize) -> f64 {
    [10.828, 13.816, 16.266, 18.467, 20.515][df - 1]
}

fn decoding_equivalences() -> Check {
    let greedy = |max_new| DecodeConfig { max_new, ..Default::default() };
    let beam = |b, max_new| DecodeConfig { b, max_new, ..DecodeConfig::with_method(Method::Beam) };
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    let mut lines = 0;
    for seed in 0..50 {
        let toy = Toy { vocab: 6, seed };
        let g = complete_ids(&toy, &[1], &greedy(12), 5, &mut rng).map_err(|e| e.to_string())?;
        let b1 = complete_ids(&toy, &[1], &beam(1, 12), 5, &mut rng).map_err(|e| e.to_string())?;
        let k1 = complete_ids(&toy, &[1], &DecodeConfig { k: 1, max_new: 12, ..DecodeConfig::with_method(Method::TopK) }, 5, &mut rng)
            .map_err(|e| e.to_string())?;
        ensure(g == b1, || format!("toy {seed}: beam(1) {b1:?} vs greedy {g:?}"))?;
        ensure(g == k1, || format!("toy {seed}: top_k(1) {k1:?} vs greedy {g:?}"))?;
        lines += 1;
    }
    let tcfg = ModelConfig { n_layer: 2, n_head: 2, n_embd: 16, block_size: 32, vocab_size: 12, dropout: 0.0 };
    for seed in 0..5 {
        let m = Model::<f32>::init(tcfg, seed).unwrap();
        let ctx = [3, 1, 4, 1, 5];
        let g = complete_ids(&m, &ctx, &greedy(10), 11, &mut rng).map_err(|e| e.to_string())?;
        let b1 = complete_ids(&m, &ctx, &beam(1, 10), 11, &mut rng).map_err(|e| e.to_string())?;
        let k1 = complete_ids(&m, &ctx, &DecodeConfig { k: 1, max_new: 10, ..DecodeConfig::with_method(Method::TopK) }, 11, &mut rng)
            .map_err(|e| e.to_string())?;
        ensure(g == b1 && g == k1, || format!("transformer {seed}: greedy {g:?} beam1 {b1:?} topk1 {k1:?}"))?;
        lines += 1;
    }

    let mut exhaustive = 0;
    for seed in 0..20 {
        let toy = Toy { vocab: 3, seed };
        for max_new in 1..=6 {
            let got = beam_search(&toy, &[0], &beam(3usize.pow(max_new as u32), max_new), 2).map_err(|e| e.to_string())?;
            let (ids, lp, done) = enumerate_best(&toy, &[0], 2, max_new);
            ensure(got.ids == ids && got.finished == done && (got.logprob - lp).abs() < 1e-9, || {
                format!("toy {seed} max_new {max_new}: beam {:?} vs enumeration {ids:?}", got.ids)
            })?;
            exhaustive += 1;
        }
    }

    let mut drng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..100 {
        let n = drng.gen_range(1..40);
        let raw: Vec<f64> = (0..n).map(|_| drng.gen::<f64>().powi(3)).collect();
        let total: f64 = raw.iter().sum();
        let d: Vec<f64> = raw.into_iter().map(|x| x / total).collect();
        let p = drng.gen_range(0.01..=1.0);
        let set = nucleus(&d, p);
        let mass: f64 = set.iter().map(|&i| d[i as usize]).sum();
        let smallest = set.iter().map(|&i| d[i as usize]).fold(f64::INFINITY, f64::min);
        ensure(mass >= p || (set.len() == d.len() && mass >= d.iter().sum::<f64>() - 1e-12), || {
            format!("case {case}: nucleus mass {mass} below p {p}")
        })?;
        ensure(mass - smallest < p, || format!("case {case}: nucleus not minimal (p {p}, mass {mass})"))?;
        ensure((0..n as u32).all(|i| set.contains(&i) || d[i as usize] <= smallest), || {
            format!("case {case}: nucleus skips a more probable token")
        })?;
    }

    const DRAWS: usize = 10_000;
    let d = [0.1, 0.2, 0.3, 0.4, 0.0];
    let sq: f64 = d.iter().map(|x| x * x).sum();
    let cases: Vec<(DecodeConfig, Vec<f64>)> = vec![
        (DecodeConfig::with_method(Method::Sample), d.to_vec()),
        (DecodeConfig { temp: 0.5, ..DecodeConfig::with_method(Method::Temperature) }, d.iter().map(|x| x * x / sq).collect()),
        (DecodeConfig { k: 2, ..DecodeConfig::with_method(Method::TopK) }, vec![0.0, 0.0, 3.0 / 7.0, 4.0 / 7.0, 0.0]),
        (DecodeConfig { p: 0.8, ..DecodeConfig::with_method(Method::TopP) }, vec![0.0, 2.0 / 9.0, 3.0 / 9.0, 4.0 / 9.0, 0.0]),
    ];
    let mut stats = Vec::new();
    for (cfg, expected) in cases {
        let mut srng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut counts = vec![0usize; d.len()];
        for _ in 0..DRAWS {
            counts[pick(&d, &cfg, &mut srng).map_err(|e| e.to_string())? as usize] += 1;
        }
        let (mut chi2, mut cells) = (0.0, 0);
        for (c, e) in counts.iter().zip(&expected) {
            if *e == 0.0 {
                ensure(*c == 0, || format!("{}: drew a zero-probability token", cfg.label()))?;
                continue;
            }
            let exp = e * DRAWS as f64;
            chi2 += (*c as f64 - exp).powi(2) / exp;
            cells += 1;
        }
        let crit = chi2_critical(cells - 1);
        ensure(chi2 < crit, || format!("{}: chi2 {chi2:.2} >= {crit} (df {})", cfg.label(), cells - 1))?;
        stats.push(format!("{} {chi2:.2}", cfg.method.name()));
    }
    Ok(format!(
        "beam(1)/top_k(1) == greedy on {lines} lines; {exhaustive} exhaustive beam cases; 100 nucleus cases; chi2: {}",
        stats.join(", ")
    ))
}

// -------------------------------------------------------------- metrics

fn recursive_distance(a: &[u8], b: &[u8]) -> usize {
    fn go(a: &[u8], b: &[u8], i: usize, j: usize, memo: &mut [[u8; 9]; 9]) -> usize {
        if i == a.len() {
            return b.len() - j;
        }
        if j == b.len() {
            return a.len() - i;
        }
        if memo[i][j] != u8::MAX {
            return memo[i][j] as usize;
        }
        let d = if a[i] == b[j] {
            go(a, b, i + 1, j + 1, memo)
        } else {
            1 + go(a, b, i + 1, j, memo).min(go(a, b, i, j + 1, memo)).min(go(a, b, i + 1, j + 1, memo))
        };
        memo[i][j] = d as u8;
        d
    }
    go(a, b, 0, 0, &mut [[u8::MAX; 9]; 9])
}

fn all_strings(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier.iter().flat_map(|s| ['a', 'b', 'c'].map(|c| format!("{s}{c}"))).collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

#[derive(Deserialize)]
struct MrrCase {
    candidates: Vec<String>,
    gold: String,
    rr: f64,
}

#[derive(Deserialize)]
struct MrrFixture {
    cutoff: usize,
    cases: Vec<MrrCase>,
    mean_numerator: u64,
    mean_denominator: u64,
}

fn metric_oracles() -> Check {
    let strings = all_strings(8);
    ensure(strings.len() == 9841, || format!("{} strings", strings.len()))?;
    let mut pairs = 0u64;
    for a in &strings {
        for b in &strings {
            let want = recursive_distance(a.as_bytes(), b.as_bytes());
            let got = levenshtein(a, b);
            ensure(got == want, || format!("levenshtein({a:?}, {b:?}) = {got}, oracle {want}"))?;
            pairs += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alphabet = ['a', 'b', 'é', ' ', 'z'];
    let random = |rng: &mut ChaCha8Rng| -> String { (0..rng.gen_range(0..12)).map(|_| alphabet[rng.gen_range(0..5)]).collect() };
    for _ in 0..5000 {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let (ab, ba, ac, bc) = (levenshtein(&a, &b), levenshtein(&b, &a), levenshtein(&a, &c), levenshtein(&b, &c));
        let (la, lb) = (a.chars().count(), b.chars().count());
        ensure(ab == ba, || format!("asymmetric on {a:?} {b:?}"))?;
        ensure((ab == 0) == (a == b), || format!("identity fails on {a:?} {b:?}"))?;
        ensure(ac <= ab + bc, || format!("triangle fails on {a:?} {b:?} {c:?}"))?;
        ensure(la.abs_diff(lb) <= ab && ab <= la.max(lb), || format!("bounds fail on {a:?} {b:?}"))?;
        let es = edit_similarity(&a, &b);
        ensure((0.0..=100.0).contains(&es), || format!("ES {es} out of range"))?;
    }

    let text = std::fs::read_to_string(repo().join("crates/core/tests/fixtures/mrr_cases.json")).map_err(|e| e.to_string())?;
    let fx: MrrFixture = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    ensure(fx.cutoff == MRR_CUTOFF && fx.cases.len() == 20, || "fixture shape".into())?;
    ensure(fx.cases.iter().any(|c| c.rr == 0.0 && !c.candidates.contains(&c.gold)), || "no absent-gold case".into())?;
    ensure(fx.cases.iter().any(|c| c.rr == 0.0 && c.candidates.iter().position(|x| *x == c.gold).is_some_and(|i| i >= MRR_CUTOFF)), || {
        "no beyond-cutoff case".into()
    })?;
    for c in &fx.cases {
        let rr = reciprocal_rank(&c.candidates, &c.gold);
        ensure((rr - c.rr).abs() < 1e-12, || format!("rr {rr} vs {} for {:?}", c.rr, c.candidates))?;
    }
    let pairs_mrr: Vec<(Vec<String>, String)> = fx.cases.iter().map(|c| (c.candidates.clone(), c.gold.clone())).collect();
    let expected = fx.mean_numerator as f64 / fx.mean_denominator as f64;
    let got = mrr(&pairs_mrr);
    ensure((got - expected).abs() < 1e-12, || format!("MRR {got} vs {expected}"))?;
    Ok(format!("{pairs} Levenshtein pairs; 5000 random axiom triples; MRR {got:.6} on 20 cases"))
}

// --------------------------------------------------------------- sweeps

fn sweep_harness() -> Check {
    let dir = scratch("sweeps");
    let overrides: Vec<String> = [
        "vocab_size=512",
        "n_layer=2",
        "n_head=2",
        "n_embd=32",
        "block_size=64",
        "dropout=0",
        "batch_size=8",
        "max_steps=150",
        "learning_rate=3e-3",
        "eval_lines=10",
        "max_new=12",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let cfg = RunConfig::load(None, &overrides).map_err(|e| e.to_string())?;
    let data = dir.join("data");
    commands::run_preprocess(&corpus_dir(), &data, &cfg).map_err(|e| e.to_string())?;
    let weights = commands::run_sweep_weights(&data, &dir.join("weights"), &cfg).map_err(|e| e.to_string())?;
    let labels: Vec<&str> = weights.rows.iter().map(|r| r.label.as_str()).collect();
    let expected = ["no-weight", "1:9", "2:8", "3:7", "4:6", "5:5", "6:4", "7:3", "8:2", "9:1"];
    ensure(labels == expected, || format!("weight rows {labels:?}"))?;
    let one_nine = &weights.rows[1];

    let code_cfg = RunConfig { strategy: saotf_cli::config::Strategy::Code, ..cfg.clone() };
    let run = dir.join("run");
    commands::run_train(&data, &run, &code_cfg).map_err(|e| e.to_string())?;
    let decode_cfg = RunConfig { eval_lines: 4, max_new: 8, ..cfg.clone() };
    let decode = commands::run_sweep_decode(&data, &run.join(commands::MODEL_FILE), &dir.join("decode"), &decode_cfg)
        .map_err(|e| e.to_string())?;
    let grid = decode_grid(&DecodeConfig::default());
    ensure(decode.rows.len() == grid.len(), || format!("{} decode rows", decode.rows.len()))?;
    for m in [Method::Beam, Method::Temperature, Method::TopK, Method::TopP] {
        let count = decode.rows.iter().filter(|r| r.config.method == m).count();
        let want = match m {
            Method::Beam => BEAM_GRID.len(),
            Method::Temperature => TEMPERATURE_GRID.len(),
            Method::TopK => TOP_K_GRID.len(),
            _ => TOP_P_GRID.len(),
        };
        ensure(count == want, || format!("{} rows for {}", count, m.name()))?;
    }
    for r in &decode.rows {
        let n = if r.config.method.is_stochastic() { REPEAT_SEEDS.len() } else { 1 };
        ensure(r.em.values.len() == n, || format!("{}: {} seeds", r.label, r.em.values.len()))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!(
        "10 weight rows, {} decode rows; held-out token acc 1:9 = {:.2}% vs code-only = {:.2}% (reported, not gated)",
        decode.rows.len(),
        one_nine.token_accuracy,
        weights.baseline.token_accuracy
    ))
}

// ---------------------------------------------------------------- probe

fn probe_scan() -> Check {
    let dir = scratch("probe");
    let files = corpus();
    for (name, src) in &files {
        let status = check_prefix(src, Checker::GrammarSubset);
        ensure(status.is_parsable(), || format!("{name} rejected: {:?}", status.reason))?;
    }
    let cfg = RunConfig { checker: Checker::GrammarSubset, ..RunConfig::default() };
    let pattern = format!("{}/*.py", corpus_dir().display());
    let out = commands::run_probe(&pattern, &dir, &cfg).map_err(|e| e.to_string())?;
    ensure(out.summary.files == files.len(), || format!("scanned {} of {} files", out.summary.files, files.len()))?;
    let failure = out.summary.failed as f64 / out.summary.total_chars as f64;
    ensure(failure > 0.0 && failure < 1.0, || format!("failure fraction {failure}"))?;
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!(
        "{} files, {} prefixes, {:.2}% fail; every full file parsable",
        out.summary.files, out.summary.total_chars, out.summary.failure_pct
    ))
}

// ------------------------------------------------------------------ main

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria = [
        Criterion { name: "lexer golden equivalence", limit: Some(Duration::from_secs(10)), run: lexer_golden },
        Criterion { name: "alignment invariant", limit: Some(Duration::from_secs(30)), run: alignment_invariant },
        Criterion { name: "gradient correctness", limit: Some(Duration::from_secs(120)), run: gradient_correctness },
        Criterion { name: "overfit sanity", limit: Some(Duration::from_secs(600)), run: overfit_sanity },
        Criterion { name: "strategy equivalences", limit: None, run: strategy_equivalences },
        Criterion { name: "decoding equivalences", limit: None, run: decoding_equivalences },
        Criterion { name: "metric oracles", limit: None, run: metric_oracles },
        Criterion { name: "sweep harness", limit: None, run: sweep_harness },
        Criterion { name: "probe", limit: None, run: probe_scan },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failures = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.1?}, limit {limit:?}")),
            (o, _) => o,
        };
        let limit = c.limit.map_or(String::new(), |l| format!(" / limit {}s", l.as_secs()));
        match outcome {
            Ok(detail) => println!("PASS  {:<24} ({:.1}s{limit})  {detail}", c.name, elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {:<24} ({:.1}s{limit})  {why}", c.name, elapsed.as_secs_f64());
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
