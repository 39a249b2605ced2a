//! Table builders and serialization for the command-line front end and the
//! runnable examples. Every report is assembled from exact values and
//! formatted at the edge, so output is deterministic and independent of
//! thread count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::counting::{self, CountSystem, DeckProfile, Estimator};
use crate::error::{Error, Result};
use crate::game::{decision_point_order, Hand, PackComposition, DENOMS};
use crate::rational::{int, to_decimal_signif, Rational};
use crate::solver::{
    deal_probability, dealer_natural_probability, dealer_natural_untied_probability,
    infinite::infinite_deck_expectation, overall_expectation, Action, NaturalPay, RuleVariant,
    StrategyTable,
};
use crate::variation::{self, Situation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
        }
    }
}

/// How rationals become strings: exact `p/q` or decimals with significant digits.
#[derive(Clone, Copy, Debug)]
pub enum ValueStyle {
    Exact,
    Decimal(usize),
}

impl ValueStyle {
    pub fn render(&self, q: &Rational) -> String {
        match self {
            ValueStyle::Exact => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            ValueStyle::Decimal(sig) => to_decimal_signif(q, *sig),
        }
    }
}

/// A rectangular report: schema id, column names, string cells.
#[derive(Clone, Debug)]
pub struct Report {
    pub schema: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(schema: &str, columns: &[&str]) -> Self {
        Report {
            schema: format!("snackjack/{schema}/v1"),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_text(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = format!("# schema: {}\n", self.schema);
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.clone(), serde_json::Value::String(v.clone())))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "schema": self.schema, "rows": rows });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = format!("# {}\n", self.schema);
        let fmt_row = |cells: &[String], widths: &[usize]| {
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        out.push_str(&fmt_row(&self.columns, &widths));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_row(row, &widths));
            out.push('\n');
        }
        out
    }
}

fn fmt_opt(v: Option<&Rational>, style: ValueStyle) -> String {
    v.map(|q| style.render(q))
        .unwrap_or_else(|| "na".to_string())
}

/// The strategy derivation table: per-action conditional expectations, the
/// optimal action set, and deal weights scaled to a common integer.
pub fn strategy_report(table: &StrategyTable, two_card_only: bool, style: ValueStyle) -> Report {
    let mut entries: Vec<_> = table
        .entries()
        .iter()
        .filter(|e| !two_card_only || e.hand.size() == 2)
        .collect();
    entries.sort_by(|a, b| decision_point_order(&(a.hand, a.upcard), &(b.hand, b.upcard)));
    // Common scale for the deal probabilities, natural rows included.
    let mut weights: Vec<(usize, Rational)> = Vec::new();
    let mut lcm = BigInt::one();
    for (i, e) in entries.iter().enumerate() {
        if e.hand.size() == 2 {
            let p = deal_probability(&table.pack, &e.hand, e.upcard);
            lcm = lcm.lcm(p.denom());
            weights.push((i, p));
        }
    }
    let untied = dealer_natural_untied_probability(&table.pack);
    let both = dealer_natural_probability(&table.pack) - &untied;
    lcm = lcm.lcm(untied.denom()).lcm(both.denom());
    let scale = Rational::from_integer(lcm.clone());
    let weight_col = format!("probx{lcm}");
    let mut report = Report::new(
        "strategy",
        &[
            "hand",
            "htot",
            "tot",
            "up",
            "e_std",
            "e_hit",
            "e_dbl",
            "e_spl",
            "bs",
            "e_max",
            &weight_col,
        ],
    );
    for (i, e) in entries.iter().enumerate() {
        let weight = weights
            .iter()
            .find(|(j, _)| *j == i)
            .map(|(_, p)| (p * &scale).to_integer().to_string())
            .unwrap_or_default();
        report.push(vec![
            e.hand.to_string(),
            e.hand.hard_total().to_string(),
            e.hand.total().to_string(),
            e.upcard.to_string(),
            fmt_opt(e.value(Action::Stand), style),
            fmt_opt(e.value(Action::Hit), style),
            fmt_opt(e.value(Action::Double), style),
            fmt_opt(e.value(Action::Split), style),
            e.optimal_label(),
            style.render(&e.emax),
            weight,
        ]);
    }
    if !two_card_only {
        let blank = || "".to_string();
        report.push(vec![
            "dealer natural, player not".into(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            "-1".into(),
            (&untied * &scale).to_integer().to_string(),
        ]);
        report.push(vec![
            "both naturals".into(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            "0".into(),
            (&both * &scale).to_integer().to_string(),
        ]);
    }
    report
}

/// Overall expectation per deck count, optionally with the infinite-deck row.
pub fn expectation_report(
    decks: &[u32],
    include_infinite: bool,
    rules: &RuleVariant,
    style: ValueStyle,
) -> Result<Report> {
    let mut report = Report::new("expectation", &["decks", "expectation"]);
    for &d in decks {
        if d == 0 {
            return Err(Error::InvalidConfig("deck count must be positive".into()));
        }
        let ev = overall_expectation(&PackComposition::decks(d), rules)?;
        report.push(vec![d.to_string(), style.render(&ev)]);
    }
    if include_infinite {
        let ev = infinite_deck_expectation(rules);
        report.push(vec!["inf".into(), style.render(&ev)]);
    }
    Ok(report)
}

/// Mimic-the-dealer statistics for one pack.
pub fn mimic_report(pack: &PackComposition, style: ValueStyle) -> Result<Report> {
    let stats = crate::dealer::mimic_dealer_expectation(pack)?;
    let mut report = Report::new(
        "mimic",
        &["pack", "ev", "p_double_bust", "p_winning_natural"],
    );
    report.push(vec![
        pack.to_string(),
        style.render(&stats.ev),
        style.render(&stats.p_double_bust),
        style.render(&stats.p_winning_natural),
    ]);
    Ok(report)
}

/// Per-n FTCC and betting statistics (the data behind the curves).
pub fn ftcc_report(
    range: std::ops::RangeInclusive<u32>,
    nu: &Rational,
    style: ValueStyle,
) -> Result<Report> {
    let rows = counting::per_n_rows(range, nu)?;
    let mut report = Report::new(
        "ftcc",
        &[
            "n",
            "mean",
            "mean_pos",
            "variance",
            "be_level1",
            "be_level6",
            "spread_profit",
        ],
    );
    for row in rows {
        report.push(vec![
            row.n.to_string(),
            style.render(&row.mean),
            style.render(&row.mean_pos),
            style.render(&row.variance),
            row.be_level1
                .as_ref()
                .map(|v| style.render(v))
                .unwrap_or_else(|| "na".into()),
            row.be_level6
                .as_ref()
                .map(|v| style.render(v))
                .unwrap_or_else(|| "na".into()),
            style.render(&row.spread_profit),
        ]);
    }
    Ok(report)
}

/// Effects of removal (x311) with the two reference counting systems, plus
/// the scaled EoR rows for 52, 104, 312, and infinitely many cards.
pub fn eor_report(style: ValueStyle) -> Report {
    let mut report = Report::new("eor", &["quantity", "aces", "deuces", "treys"]);
    for (label, cards) in [
        ("51xEoR_52", Some(52)),
        ("103xEoR_104", Some(104)),
        ("311xEoR_312", Some(312)),
        ("limit", None),
    ] {
        let row = counting::scaled_eor_row(cards);
        report.push(
            std::iter::once(label.to_string())
                .chain(row.iter().map(|v| style.render(v)))
                .collect(),
        );
    }
    report
}

/// Counting-system summary: rho, gamma, aggregate betting efficiency, and the
/// positive-expectation true-count threshold.
pub fn system_summary_report(
    systems: &[CountSystem],
    nu: &Rational,
    style: ValueStyle,
) -> Result<Report> {
    let mut report = Report::new(
        "counting-summary",
        &["system", "rho", "gamma", "tc_threshold", "aggregate_be"],
    );
    for system in systems {
        let eval = counting::count_system_eval(system)?;
        let threshold = counting::true_count_threshold(system, nu)?;
        let be = counting::aggregate_betting_efficiency(system, nu)?;
        report.push(vec![
            system.to_string(),
            format!("{:.6}", eval.rho),
            style.render(&eval.gamma),
            style.render(&threshold),
            style.render(&be),
        ]);
    }
    Ok(report)
}

/// L1 distances between the exact conditional expectation and its linear
/// estimates at the requested n values.
pub fn l1_report(ns: &[u32], systems: &[CountSystem], style: ValueStyle) -> Result<Report> {
    let mut columns = vec!["n".to_string(), "eor_linear".to_string()];
    for s in systems {
        columns.push(format!("count{s}"));
    }
    let cols: Vec<&str> = columns.iter().map(|s| s.as_str()).collect();
    let mut report = Report::new("l1-distance", &cols);
    for &n in ns {
        let mut row = vec![n.to_string()];
        row.push(style.render(&counting::estimator_l1_distance(n, &Estimator::EorLinear)?));
        for s in systems {
            row.push(style.render(&counting::estimator_l1_distance(
                n,
                &Estimator::CountLinear(*s),
            )?));
        }
        report.push(row);
    }
    Ok(report)
}

/// Betting efficiency at the requested n values.
pub fn be_report(
    ns: &[u32],
    systems: &[CountSystem],
    nu: &Rational,
    style: ValueStyle,
) -> Result<Report> {
    let mut columns = vec!["n".to_string()];
    for s in systems {
        columns.push(format!("be{s}"));
    }
    let cols: Vec<&str> = columns.iter().map(|s| s.as_str()).collect();
    let mut report = Report::new("betting-efficiency", &cols);
    for &n in ns {
        let mut row = vec![n.to_string()];
        for s in systems {
            row.push(match counting::betting_efficiency(n, s, nu) {
                Ok(v) => style.render(&v),
                Err(_) => "na".into(),
            });
        }
        report.push(row);
    }
    Ok(report)
}

/// Rounded-true-count pmf and conditional net expectations at one n.
pub fn tc_report(n: u32, system: &CountSystem, nu: &Rational, style: ValueStyle) -> Result<Report> {
    let pmf = counting::rounded_tc_distribution(n, system)?;
    let mut report = Report::new("true-count", &["n", "k", "prob", "cond_ev"]);
    for (k, p) in pmf {
        let cond = counting::conditional_ev_given_tc_with(n, k, nu, system)?;
        report.push(vec![
            n.to_string(),
            k.to_string(),
            style.render(&p),
            style.render(&cond.ev),
        ]);
    }
    Ok(report)
}

/// Expected profit of the clamped-true-count bet spread at the requested n.
pub fn spread_report(
    ns: &[u32],
    nu: &Rational,
    min_bet: i64,
    max_bet: i64,
    system: &CountSystem,
    style: ValueStyle,
) -> Result<Report> {
    let mut report = Report::new("bet-spread", &["n", "expected_profit"]);
    for &n in ns {
        let v = counting::bet_spread_profit(n, nu, min_bet, max_bet, system)?;
        report.push(vec![n.to_string(), style.render(&v)]);
    }
    Ok(report)
}

/// Composition counts for a deck profile.
pub fn counts_report(profile: &DeckProfile, ns: &[u32], with_total: bool) -> Report {
    let mut report = Report::new("composition-counts", &["profile", "n", "count"]);
    for &n in ns {
        report.push(vec![
            profile.name.to_string(),
            n.to_string(),
            counting::composition_count(profile, n).to_string(),
        ]);
    }
    if with_total {
        report.push(vec![
            profile.name.to_string(),
            "total".into(),
            counting::composition_count_total(profile).to_string(),
        ]);
    }
    report
}

/// The strategy-variation summary (rho, index, criterion, average EV).
pub fn table10_report(system: &CountSystem, style: ValueStyle) -> Result<Report> {
    let rows = variation::table10(system)?;
    let mut report = Report::new(
        "variation-summary",
        &[
            "hand",
            "up",
            "bs",
            "alt",
            "rho",
            "index",
            "criterion",
            "avg_ev",
            "avg_ev_millionths",
        ],
    );
    for row in rows {
        let index_label = format!(
            "{}{}",
            to_decimal_signif(&row.index_constant, 3),
            if row.has_n_term { "*" } else { "" }
        );
        let millionths = (&row.average_ev * int(1_000_000))
            .round()
            .to_integer()
            .to_string();
        report.push(vec![
            row.situation.hand.to_string(),
            row.situation.upcard.to_string(),
            row.situation.baseline.abbrev().into(),
            row.situation.alternative.abbrev().into(),
            format!("{:.3}", row.rho),
            index_label,
            row.criterion_label(),
            style.render(&row.average_ev),
            millionths,
        ]);
    }
    Ok(report)
}

/// Per-n curves for one departure situation.
pub fn situation_report(
    situation: &Situation,
    system: &CountSystem,
    range: std::ops::RangeInclusive<u32>,
    style: ValueStyle,
) -> Result<Report> {
    let curves = variation::situation_curves(situation, system, range)?;
    let mut report = Report::new(
        "variation-curves",
        &["n", "prob_departure", "gain", "realized_ev", "approx_ev"],
    );
    for c in curves {
        report.push(vec![
            c.n.to_string(),
            style.render(&c.prob_departure),
            style.render(&c.gain),
            style.render(&c.realized_ev),
            format!("{:.10}", c.approx_ev),
        ]);
    }
    Ok(report)
}

/// Parse "l1,l2,l3" into a hand.
pub fn parse_hand(s: &str) -> Result<Hand> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad hand {s:?}")))
        })
        .collect::<Result<_>>()?;
    if parts.len() != 3 {
        return Err(Error::InvalidConfig(format!(
            "hand needs three counts, got {s:?}"
        )));
    }
    Ok(Hand::new(parts[0], parts[1], parts[2]))
}

pub fn parse_action(s: &str) -> Result<Action> {
    match s.to_ascii_lowercase().as_str() {
        "s" | "stand" => Ok(Action::Stand),
        "h" | "hit" => Ok(Action::Hit),
        "d" | "double" | "dbl" => Ok(Action::Double),
        "spl" | "split" => Ok(Action::Split),
        other => Err(Error::InvalidConfig(format!("unknown action {other:?}"))),
    }
}

/// Parse "a..b" or a comma list of integers into n values.
pub fn parse_n_values(s: &str) -> Result<Vec<u32>> {
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("bad range {s:?}")))?;
        let hi: u32 = b
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("bad range {s:?}")))?;
        if lo > hi {
            return Err(Error::InvalidConfig(format!("empty range {s:?}")));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidConfig(format!("bad n list {s:?}")))
        })
        .collect()
}

/// Rule variant for the even-money natural test plus the default.
pub fn rules_by_name(name: &str, nu: Rational) -> Result<RuleVariant> {
    let natural_pay = match name {
        "default" | "three-to-two" => NaturalPay::ThreeToTwo,
        "even-money" => NaturalPay::EvenMoneyLosesToNatural,
        other => {
            return Err(Error::InvalidConfig(format!(
                "unknown rule variant {other:?}"
            )))
        }
    };
    if nu.is_negative() {
        return Err(Error::InvalidConfig(
            "commission must be nonnegative".into(),
        ));
    }
    Ok(RuleVariant {
        natural_pay,
        commission: nu,
    })
}

/// Expand "1,0,1" / "3" style pack specs; decks and composition are exclusive.
pub fn resolve_pack(decks: Option<u32>, composition: Option<&str>) -> Result<PackComposition> {
    match (decks, composition) {
        (Some(_), Some(_)) => Err(Error::InvalidConfig(
            "give either --decks or --composition, not both".into(),
        )),
        (Some(d), None) if d > 0 => Ok(PackComposition::decks(d)),
        (Some(_), None) => Err(Error::InvalidConfig("deck count must be positive".into())),
        (None, Some(c)) => {
            let h = parse_hand(c)?;
            Ok(PackComposition::new(h.l1, h.l2, h.l3))
        }
        (None, None) => Ok(PackComposition::decks(1)),
    }
}

pub fn upcards() -> [u8; 3] {
    DENOMS
}
