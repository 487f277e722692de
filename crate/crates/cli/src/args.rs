use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ppattach::baselines::Method;
use ppattach::normalize::{Rule, StemmerKind};
use ppattach::{BackoffConfig, Combination, Stage, StageSet};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ppattach",
    version,
    about = "Prepositional phrase attachment with a backed-off count model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize a quintuple file (numbers, case, names, verb stems).
    Preprocess(PreprocessArgs),
    /// Count sub-tuples in a quintuple file and write a model file.
    Train(TrainArgs),
    /// Decide attachment for unlabeled quadruples.
    Predict(PredictArgs),
    /// Score a model on a labeled test file, broken down by backoff stage.
    Eval(EvalArgs),
    /// Score a reference decision rule on a labeled test file.
    Baseline(BaselineArgs),
    /// Frequency cut-off and single-tuple ablations.
    Ablate(AblateArgs),
}

#[derive(Debug, Args)]
pub struct PreprocessArgs {
    /// Quintuple file to normalize.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Output file; stdout if omitted.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Rules to switch off (year, num, lowercase, name, name-collapse, stem).
    #[arg(long, value_name = "RULE", value_delimiter = ',', value_parser = parse_rule)]
    pub disable: Vec<Rule>,
    /// Verb stemmer: `rules` or `none`.
    #[arg(long, default_value = "rules", value_parser = parse_stemmer)]
    pub stemmer: StemmerKind,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Training quintuple file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Model file to write.
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    /// Zero every sub-tuple seen fewer than this many times before saving.
    #[arg(long, value_name = "C")]
    pub cutoff: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CombinationArg {
    Weighted,
    Average,
}

#[derive(Debug, Args)]
pub struct BackoffArgs {
    /// How tuples of the triple and pair stages are combined.
    #[arg(long, value_enum, default_value = "weighted")]
    pub combination: CombinationArg,
    /// Per-stage cut-offs c1,c2,c3,c4: a stage is used only when its total count exceeds its cut-off.
    #[arg(
        long,
        value_name = "C1,C2,C3,C4",
        value_delimiter = ',',
        default_value = "0,0,0,0"
    )]
    pub stage_cutoffs: Vec<u64>,
    /// Stages where an estimate of exactly 0.5 backs off further, or `none`.
    #[arg(
        long,
        value_name = "STAGES",
        value_delimiter = ',',
        default_value = "quadruple,triple"
    )]
    pub neutral_stages: Vec<String>,
}

impl BackoffArgs {
    pub fn config(&self) -> Result<BackoffConfig, CliError> {
        let cutoffs: [u64; 4] = self
            .stage_cutoffs
            .clone()
            .try_into()
            .map_err(|_| CliError::Usage("--stage-cutoffs takes exactly four values".into()))?;
        let mut neutral_stages = StageSet::EMPTY;
        for name in &self.neutral_stages {
            if name == "none" {
                continue;
            }
            match Stage::from_name(name) {
                Some(s) if s != Stage::Default => neutral_stages.insert(s),
                _ => return Err(CliError::Usage(format!("unknown stage {name:?}"))),
            }
        }
        Ok(BackoffConfig {
            cutoffs,
            combination: match self.combination {
                CombinationArg::Weighted => Combination::WeightedSum,
                CombinationArg::Average => Combination::SimpleAverage,
            },
            neutral_stages,
        })
    }
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    /// File of unlabeled `V N1 P N2` lines.
    #[arg(long = "input", value_name = "FILE", conflicts_with = "words")]
    pub input: Option<PathBuf>,
    /// A single quadruple given as four words.
    #[arg(value_names = ["V", "N1", "P", "N2"], num_args = 4)]
    pub words: Vec<String>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub backoff: BackoffArgs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    /// Labeled quintuple file.
    #[arg(long, value_name = "FILE")]
    pub test: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub backoff: BackoffArgs,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    /// noun, prep, hindle-rooth or pair-backoff.
    #[arg(long, value_parser = parse_method)]
    pub method: Method,
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub test: PathBuf,
    /// Keep only test items where the Hindle-Rooth test is definite.
    #[arg(long)]
    pub restrict_hr: bool,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("experiment").required(true).args(["cutoff", "tuple", "rank_tuples"])))]
pub struct AblateArgs {
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub test: PathBuf,
    /// Zero every sub-tuple seen fewer than C times, then evaluate.
    #[arg(long, value_name = "C")]
    pub cutoff: Option<u64>,
    /// Use only this tuple kind (e.g. `.NPD`, `V.P.`, `VN.D`) at its stage.
    #[arg(long, value_name = "KINDCODE", allow_hyphen_values = true)]
    pub tuple: Option<String>,
    /// Rank all 14 non-quadruple tuple kinds by single-tuple accuracy.
    #[arg(long)]
    pub rank_tuples: bool,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub backoff: BackoffArgs,
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse()
}

fn parse_stemmer(s: &str) -> Result<StemmerKind, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}
