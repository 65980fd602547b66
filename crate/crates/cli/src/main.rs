mod report;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use rs_listdec::{bench, channel, decoder, example};
use rs_listdec::{Error, Field, FieldCtx, FieldElement, GfBiPoly, GfCode, GfPoly};

use report::Report;

#[derive(Parser)]
#[command(name = "rs-listdec", version, about = "Reed-Solomon encoding and list decoding")]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a message polynomial at the code points.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message coefficients, low to high; degree below k.
        #[arg(long, value_delimiter = ',', required = true)]
        message: Vec<u64>,
    },
    /// Change a number of random positions of a word to different values.
    Corrupt {
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<u64>,
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decode a received word.
    ///
    /// With multiplicity 1 and no --list the unique decoder runs; otherwise
    /// the list decoder reports every root of the interpolation polynomial.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<u64>,
        #[arg(long = "mult", default_value_t = 1)]
        mult: usize,
        #[arg(long)]
        list: bool,
        /// y-degree bound; defaults to the largest admissible value.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Decode the built-in GF(7) instance and compare with its reference values.
    WorkedExample,
    /// CSV of interpolation multiplication counts over an (n, m) grid, k = n/2.
    Bench {
        #[arg(long, value_parser = parse_field, default_value = "2^8")]
        field: FieldSpec,
        #[arg(long = "n", value_delimiter = ',', default_value = "16,32,64")]
        ns: Vec<usize>,
        #[arg(long = "m", value_delimiter = ',', default_value = "1,2,3")]
        ms: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print 0 for wall time so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// `p` or `p^m`, e.g. `7` or `2^8`.
    #[arg(long, value_parser = parse_field)]
    field: FieldSpec,
    /// Code length; taken from --word when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    /// Distinct evaluation points; defaults to 1..=n.
    #[arg(long, value_delimiter = ',')]
    alphas: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy)]
struct FieldSpec {
    p: u64,
    m: u32,
}

impl FieldSpec {
    fn build(self) -> Result<FieldCtx, Error> {
        FieldCtx::new(self.p, self.m, None)
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let (p, m) = s.split_once('^').unwrap_or((s, "1"));
    let p = u64::from_str(p.trim()).map_err(|e| format!("bad characteristic: {e}"))?;
    let m = u32::from_str(m.trim()).map_err(|e| format!("bad extension degree: {e}"))?;
    Ok(FieldSpec { p, m })
}

enum Failure {
    /// Usage error or internal fault; exit code 1.
    Fault(String),
    /// The word could not be decoded; exit code 2.
    Decode(Report),
    /// The worked example disagrees with its reference values; exit code 1.
    Mismatch(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Fault(e.to_string())
    }
}

impl CodeArgs {
    fn build(&self, word_len: Option<usize>) -> Result<GfCode, Failure> {
        let f = self.field.build()?;
        let n = match (self.n, word_len) {
            (Some(n), Some(len)) if n != len => {
                return Err(Failure::Fault(format!("--n {n} but the word has {len} symbols")))
            }
            (Some(n), _) | (None, Some(n)) => n,
            (None, None) => return Err(Failure::Fault("--n is required".into())),
        };
        let alphas = match &self.alphas {
            Some(a) => Some(elems(a, &f)?),
            None => None,
        };
        Ok(GfCode::new(f, n, self.k, alphas)?)
    }
}

fn elems(indices: &[u64], f: &FieldCtx) -> Result<Vec<FieldElement>, Error> {
    indices.iter().map(|&i| f.elem(i)).collect()
}

fn indices(word: &[FieldElement], f: &FieldCtx) -> Value {
    json!(word.iter().map(|&a| f.index(a)).collect::<Vec<_>>())
}

fn poly(p: &GfPoly, f: &FieldCtx) -> Value {
    json!(p.to_indices(f))
}

fn bipoly(q: &GfBiPoly, f: &FieldCtx) -> Value {
    json!(q.to_indices(f))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let mut out = Report::new();
    match &cli.command {
        Command::Encode { code, message } => {
            let code = code.build(None)?;
            let f = code.field();
            let msg = GfPoly::from_indices(message, f)?;
            let c = code.encode(&msg)?;
            out.set("codeword", indices(&c, f));
        }
        Command::Corrupt {
            field,
            word,
            errors,
            seed,
        } => {
            let f = field.build()?;
            let mut v = elems(word, &f)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let positions = channel::corrupt(&mut v, *errors, &mut rng, &f)?;
            out.set("word", indices(&v, &f)).set("positions", json!(positions));
        }
        Command::Decode {
            code,
            word,
            mult,
            list,
            l,
        } => {
            let code = code.build(Some(word.len()))?;
            let v = code.word_from_indices(word)?;
            if *list || *mult > 1 || l.is_some() {
                list_decode(&code, &v, *mult, *l, &mut out)?;
            } else {
                unique_decode(&code, &v, &mut out)?;
            }
        }
        Command::WorkedExample => worked_example(&mut out)?,
        Command::Bench {
            field,
            ns,
            ms,
            seed,
            no_timing,
        } => {
            let f = field.build()?;
            let mut csv = String::from(bench::CSV_HEADER);
            csv.push('\n');
            for mut row in bench::sweep(&f, ns, ms, *seed)? {
                if *no_timing {
                    row.wall_time_ns = 0;
                }
                csv.push_str(&row.to_csv());
                csv.push('\n');
            }
            if cli.json {
                out.set("csv", csv);
            } else {
                print!("{csv}");
                return Ok(Report::new());
            }
        }
    }
    Ok(out)
}

fn unique_decode(code: &GfCode, v: &[FieldElement], out: &mut Report) -> Result<(), Failure> {
    let f = code.field();
    out.set("decoder", "unique").set("tau", code.tau());
    match decoder::unique_decode(code, v) {
        Ok(h) => {
            let c = code.evaluate(&h);
            let distance = rs_listdec::rs::hamming_distance(v, &c)?;
            out.set("status", "ok")
                .set("message", poly(&h, f))
                .set("codeword", indices(&c, f))
                .set("distance", distance);
            Ok(())
        }
        Err(e) if e.is_decode_failure() => {
            out.set("status", "no_codeword_in_range");
            Err(Failure::Decode(std::mem::take(out)))
        }
        Err(e) => Err(e.into()),
    }
}

fn list_decode(
    code: &GfCode,
    v: &[FieldElement],
    m: usize,
    l: Option<usize>,
    out: &mut Report,
) -> Result<(), Failure> {
    let f = code.field();
    let result = decoder::list_decode_with(code, v, m, l)?;
    let candidates: Vec<Value> = result
        .candidates
        .iter()
        .map(|c| {
            json!({
                "message": poly(&c.message, f),
                "codeword": indices(&c.codeword, f),
                "distance": c.distance,
            })
        })
        .collect();
    let status = if candidates.is_empty() { "no_candidates" } else { "ok" };
    out.set("decoder", "list")
        .set("status", status)
        .set("m", m)
        .set("l", result.params.l)
        .set("w", result.w)
        .set("guarantee_radius", json!(result.guarantee_radius))
        .set("q", bipoly(&result.q, f))
        .set("candidates", candidates);
    if status == "ok" {
        Ok(())
    } else {
        Err(Failure::Decode(std::mem::take(out)))
    }
}

fn worked_example(out: &mut Report) -> Result<(), Failure> {
    let report = example::run()?;
    let code = example::code();
    let f = code.field();
    let run = &report.interpolation;
    let candidates: Vec<Value> = report
        .decoded
        .candidates
        .iter()
        .map(|c| json!({ "message": poly(&c.message, f), "distance": c.distance }))
        .collect();
    out.set("status", if report.is_exact() { "match" } else { "mismatch" })
        .set("mismatches", json!(report.mismatches))
        .set("word", json!(example::WORD))
        .set("m", run.params.m)
        .set("l", run.params.l)
        .set("h_v", poly(&run.hv, f))
        .set("eta", poly(code.node_poly(), f))
        .set("q", bipoly(&run.q.y_monic(f)?, f))
        .set("candidates", candidates);
    if report.is_exact() {
        Ok(())
    } else {
        Err(Failure::Mismatch(std::mem::take(out)))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::SUCCESS
        }
        Err(Failure::Decode(report)) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(report)) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(1)
        }
        Err(Failure::Fault(msg)) => {
            eprintln!("error: {}", msg.trim_end());
            ExitCode::from(1)
        }
    }
}
