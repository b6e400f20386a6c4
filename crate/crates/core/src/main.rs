use std::collections::HashMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use rgamma::deceptive::{enumerate_sdec_below_conductor, DeceptiveBinomial};
use rgamma::genpoly::symbol_name;
use rgamma::normalform::NormalFormTemplate;
use rgamma::oracle::{canonical_normal_form, verify_point};
use rgamma::parse::{parse_generators, parse_point, parse_series_list};
use rgamma::report::Analysis;
use rgamma::symcore::{Rat, Series};
use rgamma::variety::{defining_equations, plane_test_3gen, VarietyPresentation};
use rgamma::{Error, NumericalSemigroup};

#[derive(Parser)]
#[command(name = "rgamma", version, about = "Equations for subalgebras of K[t]/(t^c) with a given semigroup")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized self-checks (analyze samples points and compares with the oracle).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Conductor, gaps, M and the plane criterion.
    Semigroup { gens: String },
    /// Normal-form template with its coefficient variables.
    Template { gens: String },
    /// Deceptive binomials below the conductor.
    Sdec { gens: String },
    /// Defining equations, one per binomial and surviving gap.
    Equations { gens: String },
    /// Everything above plus linear elimination.
    Analyze { gens: String },
    /// Membership of a coefficient point (unset variables are 0).
    Check {
        gens: String,
        #[arg(long, default_value = "")]
        point: String,
        /// Also run the brute-force closure and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Plane criterion, or the plane-point test for three generators.
    Plane {
        gens: String,
        #[arg(long)]
        point: Option<String>,
    },
    /// Canonical normal form of the algebra generated by numeric series.
    Normalize {
        /// `;`-separated series such as "t^3+t^4+t^5;t^5".
        #[arg(long)]
        series: String,
        #[arg(long = "mod")]
        modulus: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn semigroup_of(gens: &str) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&parse_generators(gens)?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Semigroup { gens } => {
            let s = semigroup_of(gens)?;
            let report = Analysis::run(&s).to_report().semigroup;
            if json {
                print_json(&report);
            } else {
                print!("{}", semigroup_text(&s));
            }
        }
        Command::Template { gens } => {
            let t = NormalFormTemplate::build(&semigroup_of(gens)?);
            if json {
                print_json(&t.to_json());
            } else {
                print!("{}", template_text(&t));
            }
        }
        Command::Sdec { gens } => {
            let sdec = enumerate_sdec_below_conductor(&semigroup_of(gens)?);
            if json {
                print_json(&sdec.iter().map(DeceptiveBinomial::to_json).collect::<Vec<_>>());
            } else {
                for b in &sdec {
                    println!("{b}  (degree {})", b.degree);
                }
            }
        }
        Command::Equations { gens } => {
            let v = defining_equations(&semigroup_of(gens)?);
            if json {
                print_json(&v.to_json(None));
            } else {
                print!("{}", equations_text(&v));
            }
        }
        Command::Analyze { gens } => {
            let s = semigroup_of(gens)?;
            let a = Analysis::run(&s);
            if json {
                print_json(&a.to_report());
            } else {
                print!("{}", semigroup_text(&s));
                println!("normal form");
                print!("{}", template_text(a.template()));
                println!("deceptive binomials below the conductor");
                for b in &a.sdec {
                    println!("  {b}  (degree {})", b.degree);
                }
                println!("equations");
                print!("{}", equations_text(&a.presentation));
                println!("elimination");
                println!("{}", a.elimination);
            }
            if let Some(seed) = cli.seed {
                let (n, bad) = self_check(&a, seed)?;
                let msg = format!("self-check: {n} sampled points, {bad} disagreements with the oracle");
                if json {
                    eprintln!("{msg}");
                } else {
                    println!("{msg}");
                }
                if bad > 0 {
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Check { gens, point, oracle } => {
            let v = defining_equations(&semigroup_of(gens)?);
            let p = parse_point(&v.template, point)?;
            let m = v.membership(&p)?;
            let agrees = if *oracle {
                Some(verify_point(&v.template, &p)? == m.in_variety)
            } else {
                None
            };
            let violated: Vec<String> = m
                .violated
                .iter()
                .map(|&k| format!("equation(gap {})", v.equations[k].gap))
                .collect();
            if json {
                print_json(&CheckJson {
                    in_variety: m.in_variety,
                    violated: m.violated.clone(),
                    oracle_agrees: agrees,
                });
            } else {
                if m.in_variety {
                    println!("in R_Γ");
                } else {
                    println!("NOT in R_Γ; violated: {}", violated.join(", "));
                }
                if let Some(a) = agrees {
                    println!("oracle: {}", if a { "agrees" } else { "DISAGREES" });
                }
            }
            if agrees == Some(false) {
                eprintln!("error: equation membership and brute-force closure disagree");
                return Ok(ExitCode::from(1));
            }
            if !m.in_variety {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Plane { gens, point } => {
            let s = semigroup_of(gens)?;
            match point {
                None => {
                    let r = s.is_plane_semigroup();
                    if json {
                        print_json(&r);
                    } else {
                        println!("{}", plane_line(&r));
                    }
                }
                Some(point) => {
                    let v = defining_equations(&s);
                    let p = parse_point(&v.template, point)?;
                    let r = plane_test_3gen(&v, &p)?;
                    if json {
                        print_json(&PlaneJson {
                            semigroup_is_plane: r.semigroup_is_plane,
                            is_plane_point: r.is_plane_point,
                            leading_coefficient: r.leading_coefficient.to_string(),
                        });
                    } else if !r.semigroup_is_plane {
                        println!("semigroup is not plane; no plane points");
                    } else {
                        println!(
                            "plane point: {} (leading coefficient {})",
                            if r.is_plane_point { "yes" } else { "no" },
                            r.leading_coefficient
                        );
                    }
                }
            }
        }
        Command::Normalize { series, modulus } => {
            let gens = parse_series_list(series, *modulus)?;
            let cf = canonical_normal_form(&gens, *modulus)?;
            if json {
                print_json(&NormalizeJson {
                    semigroup: cf.semigroup.generators().to_vec(),
                    generators: cf.generators.iter().map(Series::to_string).collect(),
                });
            } else {
                println!("semigroup <{}> below t^{modulus}", join(cf.semigroup.generators()));
                for s in &cf.generators {
                    println!("  {s}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckJson {
    in_variety: bool,
    violated: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct PlaneJson {
    semigroup_is_plane: bool,
    is_plane_point: bool,
    leading_coefficient: String,
}

#[derive(Serialize)]
struct NormalizeJson {
    semigroup: Vec<u32>,
    generators: Vec<String>,
}

fn plane_line(r: &rgamma::semigroup::PlaneCriterionReport) -> String {
    let verdict = if r.is_plane { "satisfied" } else { "fails" };
    let mut line = format!("plane criterion: {verdict} (e = {})", join(&r.e_sequence));
    if !r.condition_ii_failures.is_empty() {
        line += &format!("; condition (ii) fails at i = {}", join(&r.condition_ii_failures));
    }
    line
}

fn semigroup_text(s: &NumericalSemigroup) -> String {
    format!(
        "semigroup <{}>\n  conductor {}\n  gaps {}\n  M {}\n  {}\n",
        join(s.generators()),
        s.conductor(),
        join(s.gaps()),
        s.ambient_dimension(),
        plane_line(&s.is_plane_semigroup())
    )
}

fn template_text(t: &NormalFormTemplate) -> String {
    let v = t.semigroup().generators();
    let mut out = String::new();
    for (i, &vi) in v.iter().enumerate() {
        let name = symbol_name(i, v.len());
        if vi >= t.modulus() {
            out += &format!("  {name} = 0  (t^{vi} vanishes mod t^{})\n", t.modulus());
            continue;
        }
        let mut line = format!("  {name} = t^{vi}");
        for s in t.slots().iter().filter(|s| s.generator == i) {
            line += &format!(" + {}*t^{}", s.var, s.gap);
        }
        out += &line;
        out.push('\n');
    }
    out
}

fn equations_text(v: &VarietyPresentation) -> String {
    if v.equations.is_empty() {
        return "  (none)\n".into();
    }
    v.equations
        .iter()
        .map(|e| format!("  {}: {} = 0\n", e.tag(), e.poly))
        .collect()
}

fn small_rat(rng: &mut StdRng) -> Rat {
    Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Samples points on the variety (through the elimination) and perturbed
/// points, and counts disagreements between the equations and the oracle.
fn self_check(a: &Analysis, seed: u64) -> Result<(usize, usize), Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let t = a.template();
    let mut n = 0;
    let mut bad = 0;
    for k in 0..8 {
        let free: HashMap<_, _> = t.variables().into_iter().map(|v| (v, small_rat(&mut rng))).collect();
        let mut p = a.elimination.complete_point(t, &free)?;
        if k % 2 == 1 {
            let mut map = p.assignment().clone();
            if let Some((v, _)) = a.elimination.solved.first() {
                *map.get_mut(v).expect("template variable") += &Rat::one();
            }
            p = t.point_from_map(map)?;
        }
        n += 1;
        if a.presentation.membership(&p)?.in_variety != verify_point(t, &p)? {
            bad += 1;
        }
    }
    Ok((n, bad))
}
