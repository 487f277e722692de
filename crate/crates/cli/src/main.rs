//! `ppattach`: train, evaluate and ablate backed-off PP-attachment models.

mod args;

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use ppattach::baselines::{self, Method};
use ppattach::corpus::parse_quadruples;
use ppattach::eval::{self, ablate_cutoff, ablate_tuple, rank_tuples};
use ppattach::normalize::{normalize_corpus, NormalizeConfig};
use ppattach::{decide, Corpus, CountModel, Quadruple, TupleKind};

use args::{AblateArgs, BaselineArgs, Cli, Command, EvalArgs, PredictArgs, PreprocessArgs, TrainArgs};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn data_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Data(format!("{}: {e}", path.display()))
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| data_err(path, e))
}

fn read_corpus(path: &Path) -> CliResult<Corpus> {
    let file = File::open(path).map_err(|e| data_err(path, e))?;
    Corpus::read(BufReader::new(file)).map_err(|e| data_err(path, e))
}

fn read_model(path: &Path) -> CliResult<CountModel> {
    let file = File::open(path).map_err(|e| data_err(path, e))?;
    CountModel::read(BufReader::new(file)).map_err(|e| data_err(path, e))
}

/// Writes to `path`, or stdout when `None`.
fn write_output(path: Option<&PathBuf>, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> CliResult {
    let result = match path {
        Some(p) => File::create(p).and_then(|file| {
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            match f(&mut w).and_then(|_| w.flush()) {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                r => r,
            }
        }
    };
    result.map_err(|e| {
        let target = path.map_or("<stdout>".to_string(), |p| p.display().to_string());
        CliError::Data(format!("{target}: {e}"))
    })
}

fn preprocess(a: PreprocessArgs) -> CliResult {
    let corpus = read_corpus(&a.input)?;
    let mut cfg = NormalizeConfig {
        stemmer: a.stemmer,
        ..Default::default()
    };
    for rule in &a.disable {
        cfg.rules = cfg.rules.without(*rule);
    }
    let out = normalize_corpus(&corpus, &cfg);
    write_output(a.out.as_ref(), |w| out.write_to(w))
}

fn train(a: TrainArgs) -> CliResult {
    let corpus = read_corpus(&a.input)?;
    let mut model = CountModel::train(&corpus);
    if let Some(c) = a.cutoff {
        model = model.apply_cutoff(c);
    }
    write_output(Some(&a.model), |w| model.write_to(w))
}

fn predict(a: PredictArgs) -> CliResult {
    let model = read_model(&a.model)?;
    let cfg = a.backoff.config()?;
    let queries: Vec<Quadruple> = match (&a.input, a.words.as_slice()) {
        (Some(path), []) => parse_quadruples(&read_text(path)?).map_err(|e| data_err(path, e))?,
        (None, [v, n1, p, n2]) => vec![Quadruple::new(v.as_str(), n1.as_str(), p.as_str(), n2.as_str())
            .map_err(|e| CliError::Usage(e.to_string()))?],
        _ => {
            return Err(CliError::Usage(
                "give either four words V N1 P N2 or --input <file>".into(),
            ))
        }
    };
    write_output(a.out.as_ref(), |w| {
        for q in &queries {
            let (label, est) = decide(&model, q, &cfg);
            writeln!(w, "{label} {:.6} {}", est.p_noun(), est.stage())?;
        }
        Ok(())
    })
}

fn eval_cmd(a: EvalArgs) -> CliResult {
    let model = read_model(&a.model)?;
    let test = read_corpus(&a.test)?;
    let cfg = a.backoff.config()?;
    let report = eval::evaluate(&model, &test, &cfg);
    write_output(a.out.as_ref(), |w| write!(w, "{report}"))
}

fn baseline(a: BaselineArgs) -> CliResult {
    let model = read_model(&a.model)?;
    let full = read_corpus(&a.test)?;
    let test = if a.restrict_hr {
        baselines::restrict_hr_testset(&model, &full)
    } else {
        full.clone()
    };
    let report = baselines::score(a.method, &model, &test);
    write_output(a.out.as_ref(), |w| {
        if a.restrict_hr {
            writeln!(w, "restricted={} of {}", test.len(), full.len())?;
        }
        writeln!(w, "method={} {report}", method_name(a.method))
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::AlwaysNoun => "noun",
        Method::MostLikelyPreposition => "prep",
        Method::HindleRooth => "hindle-rooth",
        Method::PairBackoff => "pair-backoff",
    }
}

fn ablate(a: AblateArgs) -> CliResult {
    let model = read_model(&a.model)?;
    let test = read_corpus(&a.test)?;
    let cfg = a.backoff.config()?;
    if let Some(c) = a.cutoff {
        let report = ablate_cutoff(&model, &test, c, &cfg);
        return write_output(a.out.as_ref(), |w| write!(w, "{report}"));
    }
    if let Some(code) = &a.tuple {
        let kind = TupleKind::from_code(code).map_err(|e| CliError::Usage(e.to_string()))?;
        let r = ablate_tuple(&model, &test, kind, &cfg)
            .ok_or_else(|| CliError::Usage("--tuple must name a triple, pair or single kind".into()))?;
        return write_output(a.out.as_ref(), |w| {
            writeln!(
                w,
                "tuple={} cases={} correct={} accuracy={}",
                r.kind, r.accuracy.total, r.accuracy.correct, r.accuracy
            )
        });
    }
    let ranked = rank_tuples(&model, &test, &cfg);
    write_output(a.out.as_ref(), |w| {
        writeln!(
            w,
            "{:<6}{:<7}{:>8}{:>9}{:>9}",
            "Rank", "Tuple", "Cases", "Correct", "Percent"
        )?;
        for (i, t) in ranked.iter().enumerate() {
            writeln!(
                w,
                "{:<6}{:<7}{:>8}{:>9}{:>9}",
                i + 1,
                t.kind.code(),
                t.accuracy.total,
                t.accuracy.correct,
                t.accuracy.to_string()
            )?;
        }
        Ok(())
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Preprocess(a) => preprocess(a),
        Command::Train(a) => train(a),
        Command::Predict(a) => predict(a),
        Command::Eval(a) => eval_cmd(a),
        Command::Baseline(a) => baseline(a),
        Command::Ablate(a) => ablate(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Data(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
