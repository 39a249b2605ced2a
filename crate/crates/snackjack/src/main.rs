//! Command-line front end: emits every analysis table as CSV, JSON, or
//! aligned text. Heavy lifting lives in the library; the crate examples show
//! the same capabilities as embeddable code.

use clap::{Args, Parser, Subcommand};

use snackjack::counting::{CountSystem, DeckProfile, DEUCES_MINUS_ACES, LEVEL_SIX};
use snackjack::error::Error;
use snackjack::rational::{parse_rational, Rational};
use snackjack::report::{self, OutputFormat, ValueStyle};
use snackjack::solver::basic_strategy_with_rules;
use snackjack::variation::Situation;

#[derive(Parser)]
#[command(
    name = "snackjack",
    version,
    about = "Exact snackjack strategy and card-counting analysis"
)]
struct Cli {
    /// Worker threads for lattice passes (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format: csv, json, or text.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Significant digits for decimal output.
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,
    /// Print rationals exactly as p/q instead of decimals.
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PackArgs {
    /// Number of 8-card decks.
    #[arg(long)]
    decks: Option<u32>,
    /// Explicit composition "n1,n2,n3" (mutually exclusive with --decks).
    #[arg(long)]
    composition: Option<String>,
}

#[derive(Args)]
struct RuleArgs {
    /// Rule variant: default (3:2 naturals) or even-money.
    #[arg(long, default_value = "default")]
    rules: String,
    /// Commission per unit initially bet, e.g. "1/7".
    #[arg(long, default_value = "0")]
    nu: String,
}

#[derive(Subcommand)]
enum Command {
    /// Composition-dependent basic strategy table with exact action values.
    Strategy {
        #[command(flatten)]
        pack: PackArgs,
        #[command(flatten)]
        rules: RuleArgs,
        /// Restrict to two-card hands.
        #[arg(long)]
        two_card_only: bool,
    },
    /// Overall expectation by number of decks.
    Expectation {
        /// Deck counts, e.g. "1..13" or "1,2,39" (combinable: "1..13,26").
        #[arg(long, default_value = "1..13,26,39,52")]
        decks: String,
        /// Include the fixed-probability (infinite-deck) row.
        #[arg(long)]
        infinite: bool,
        #[command(flatten)]
        rules: RuleArgs,
    },
    /// Mimic-the-dealer expectation and bust statistics.
    Mimic {
        #[command(flatten)]
        pack: PackArgs,
    },
    /// Per-n conditional-expectation statistics: mean, positive part,
    /// variance, betting efficiencies, spread profit.
    Ftcc {
        /// Commission, e.g. "1/7".
        #[arg(long, default_value = "1/7")]
        nu: String,
        /// n values: "1..304" or a comma list.
        #[arg(long = "n", default_value = "1..304")]
        n_values: String,
    },
    /// Card-counting analyses: effects of removal, system quality, estimator
    /// distances, betting efficiency, true-count distributions, bet spread.
    Counting {
        /// Counting system "j1,j2,j3".
        #[arg(long, default_value = "-1,1,0")]
        system: String,
        #[arg(long, default_value = "1/7")]
        nu: String,
        /// n values for the table-style subreports.
        #[arg(
            long = "n",
            default_value = "26,52,78,104,130,156,182,208,234,260,286,301,302,303,304"
        )]
        n_values: String,
        /// Bet spread "min,max".
        #[arg(long, default_value = "1,6")]
        spread: String,
        /// Which report: summary, eor, l1, be, tc-dist, cond-ev, spread.
        #[arg(long, default_value = "summary")]
        table: String,
        /// n for tc-dist / cond-ev.
        #[arg(long, default_value_t = 156)]
        at: u32,
    },
    /// Strategy-variation analysis (departures from basic strategy).
    Variation {
        #[arg(long, default_value = "-1,1,0")]
        system: String,
        /// "summary" for the twelve-row table, or "curves".
        #[arg(long, default_value = "summary")]
        table: String,
        /// Situation for curves: "l1,l2,l3:upcard:baseline:alternative".
        #[arg(long)]
        situation: Option<String>,
        #[arg(long = "n", default_value = "1..304")]
        n_values: String,
    },
    /// Distinguishable-subset counts for snackjack, grayjack, and blackjack
    /// shoes.
    Counts {
        /// Profile: snackjack39, grayjack24, blackjack6, blackjack1.
        #[arg(long, default_value = "snackjack39")]
        profile: String,
        /// n values ("156" or "0..312"); default is the maximizing slice.
        #[arg(long = "n")]
        n_values: Option<String>,
        /// Append the total over all n.
        #[arg(long)]
        total: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    let format: OutputFormat = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let style = if cli.exact {
        ValueStyle::Exact
    } else {
        ValueStyle::Decimal(cli.precision.max(1))
    };
    match run(cli.command, format, style) {
        Ok(output) => print!("{output}"),
        Err(e) => fail(e),
    }
}

fn fail(e: Error) {
    eprintln!("error: {e}");
    std::process::exit(1);
}

fn run(command: Command, format: OutputFormat, style: ValueStyle) -> Result<String, Error> {
    match command {
        Command::Strategy {
            pack,
            rules,
            two_card_only,
        } => {
            let pack = report::resolve_pack(pack.decks, pack.composition.as_deref())?;
            let rules = parse_rules(&rules)?;
            if pack.total() < 8 {
                return Err(Error::InvalidConfig("pack needs at least 8 cards".into()));
            }
            let table = basic_strategy_with_rules(&pack, &rules);
            Ok(report::strategy_report(&table, two_card_only, style).render(format))
        }
        Command::Expectation {
            decks,
            infinite,
            rules,
        } => {
            let rules = parse_rules(&rules)?;
            let decks: Vec<u32> = decks
                .split(',')
                .map(report::parse_n_values)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .collect();
            Ok(report::expectation_report(&decks, infinite, &rules, style)?.render(format))
        }
        Command::Mimic { pack } => {
            let pack = report::resolve_pack(pack.decks, pack.composition.as_deref())?;
            Ok(report::mimic_report(&pack, style)?.render(format))
        }
        Command::Ftcc { nu, n_values } => {
            let nu = parse_nu(&nu)?;
            let ns = report::parse_n_values(&n_values)?;
            let (lo, hi) = range_of(&ns)?;
            eprintln!("sweeping n = {lo}..{hi} (every shoe composition)...");
            Ok(report::ftcc_report(lo..=hi, &nu, style)?.render(format))
        }
        Command::Counting {
            system,
            nu,
            n_values,
            spread,
            table,
            at,
        } => {
            let system = CountSystem::parse(&system)?;
            let nu = parse_nu(&nu)?;
            let ns = report::parse_n_values(&n_values)?;
            let (min_bet, max_bet) = parse_spread(&spread)?;
            let systems = [system, other_reference_system(&system)];
            match table.as_str() {
                "summary" => {
                    eprintln!("aggregating betting efficiency over n = 2..233...");
                    Ok(report::system_summary_report(&systems, &nu, style)?.render(format))
                }
                "eor" => Ok(report::eor_report(style).render(format)),
                "l1" => Ok(report::l1_report(&ns, &systems, style)?.render(format)),
                "be" => Ok(report::be_report(&ns, &systems, &nu, style)?.render(format)),
                "tc-dist" | "cond-ev" => {
                    Ok(report::tc_report(at, &system, &nu, style)?.render(format))
                }
                "spread" => Ok(
                    report::spread_report(&ns, &nu, min_bet, max_bet, &system, style)?
                        .render(format),
                ),
                other => Err(Error::InvalidConfig(format!(
                    "unknown counting table {other:?}"
                ))),
            }
        }
        Command::Variation {
            system,
            table,
            situation,
            n_values,
        } => {
            let system = CountSystem::parse(&system)?;
            match table.as_str() {
                "summary" => {
                    eprintln!("analyzing the twelve departures...");
                    Ok(report::table10_report(&system, style)?.render(format))
                }
                "curves" => {
                    let spec = situation.ok_or_else(|| {
                        Error::InvalidConfig("curves needs --situation hand:up:bs:alt".into())
                    })?;
                    let sit = parse_situation(&spec)?;
                    let ns = report::parse_n_values(&n_values)?;
                    let (lo, hi) = range_of(&ns)?;
                    eprintln!("sweeping {} over n = {lo}..{hi}...", sit.label());
                    Ok(report::situation_report(&sit, &system, lo..=hi, style)?.render(format))
                }
                other => Err(Error::InvalidConfig(format!(
                    "unknown variation table {other:?}"
                ))),
            }
        }
        Command::Counts {
            profile,
            n_values,
            total,
        } => {
            let profile = DeckProfile::by_name(&profile)
                .ok_or_else(|| Error::InvalidConfig(format!("unknown profile {profile:?}")))?;
            let ns = match n_values {
                Some(s) => report::parse_n_values(&s)?,
                None => vec![profile.shoe_size() / 2],
            };
            if let Some(&bad) = ns.iter().find(|&&n| n > profile.shoe_size()) {
                return Err(Error::InvalidConfig(format!(
                    "n = {bad} exceeds the {} shoe size {}",
                    profile.name,
                    profile.shoe_size()
                )));
            }
            Ok(report::counts_report(&profile, &ns, total).render(format))
        }
    }
}

fn parse_rules(args: &RuleArgs) -> Result<snackjack::RuleVariant, Error> {
    let nu = parse_nu(&args.nu)?;
    report::rules_by_name(&args.rules, nu)
}

fn parse_nu(s: &str) -> Result<Rational, Error> {
    parse_rational(s).map_err(Error::InvalidConfig)
}

fn parse_spread(s: &str) -> Result<(i64, i64), Error> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::InvalidConfig(format!("spread needs min,max, got {s:?}")))?;
    let min: i64 = a
        .trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("bad spread {s:?}")))?;
    let max: i64 = b
        .trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("bad spread {s:?}")))?;
    if min > max {
        return Err(Error::InvalidConfig(format!(
            "spread min {min} exceeds max {max}"
        )));
    }
    Ok((min, max))
}

fn parse_situation(s: &str) -> Result<Situation, Error> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidConfig(format!(
            "situation must be hand:upcard:baseline:alternative, got {s:?}"
        )));
    }
    let hand = report::parse_hand(parts[0])?;
    let upcard: u8 = parts[1]
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("bad upcard {s:?}")))?;
    if !(1..=3).contains(&upcard) {
        return Err(Error::InvalidConfig(format!(
            "upcard must be 1..3, got {upcard}"
        )));
    }
    let baseline = report::parse_action(parts[2])?;
    let alternative = report::parse_action(parts[3])?;
    Situation::new(hand, upcard, baseline, alternative)
}

fn other_reference_system(system: &CountSystem) -> CountSystem {
    if *system == DEUCES_MINUS_ACES {
        LEVEL_SIX
    } else {
        DEUCES_MINUS_ACES
    }
}

fn range_of(ns: &[u32]) -> Result<(u32, u32), Error> {
    let lo = *ns
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidConfig("empty n list".into()))?;
    let hi = *ns.iter().max().unwrap();
    Ok((lo, hi))
}
