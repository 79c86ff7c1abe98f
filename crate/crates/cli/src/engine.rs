//! Engine selection and the cross-check suite.

use clap::ValueEnum;
use num_bigint::BigUint;
use serde::Serialize;

use ict_core::formulas::{
    ict_alt, ict_cyclic_for_pair, ict_sym, ict_theorem6, verify_k_equals_gamma, IctError, IctReport,
    Justification,
};
use ict_core::groups::{normalizer_in_stab, Caps, Family, GroupError, PairGH};
use ict_core::oracle::{
    census_left_loops, classify_by_conjugation, classify_by_table_iso, left_right_agreement, same_partition,
};

use crate::failure::Failure;
use crate::source::PairSource;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Theorem6,
    Sym,
    Alt,
    Cyclic,
    Oracle,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Theorem6 => "theorem6",
            MethodArg::Sym => "sym",
            MethodArg::Alt => "alt",
            MethodArg::Cyclic => "cyclic",
            MethodArg::Oracle => "oracle",
        }
    }
}

pub fn compute(source: &PairSource, method: MethodArg, caps: &Caps) -> Result<IctReport, Failure> {
    let family = source.family();
    match method {
        MethodArg::Auto => auto(source, caps),
        MethodArg::Sym => match family {
            Some(Family::Sym(n)) => Ok(ict_sym(*n)?),
            _ => Err(Failure::Usage("--method sym needs --sym N".into())),
        },
        MethodArg::Alt => match family {
            Some(Family::Alt(n)) => Ok(ict_alt(*n)?),
            _ => Err(Failure::Usage("--method alt needs --alt N".into())),
        },
        // Fixtures are accepted here; the hypothesis is checked on the pair itself.
        MethodArg::Cyclic => match family {
            Some(Family::Sym(_) | Family::Alt(_)) => {
                Err(Failure::Usage("--method cyclic needs --dihedral, --pq or --fixture".into()))
            }
            _ => Ok(ict_cyclic_for_pair(&source.build(caps)?, caps)?),
        },
        MethodArg::Theorem6 => Ok(theorem6(&source.build(caps)?, caps)?),
        MethodArg::Oracle => oracle(&source.build(caps)?, caps),
    }
}

/// Orbit count of the brute-force `Γ`, with the strongest justification that
/// fits the caps. A failed check is an error; a capped check leaves the
/// report marked unverified.
fn theorem6(pair: &PairGH, caps: &Caps) -> Result<IctReport, IctError> {
    let gamma = normalizer_in_stab(pair, caps)?;
    let report = ict_theorem6(pair, &gamma)?;
    match verify_k_equals_gamma(pair, &gamma, caps) {
        Ok(j) => Ok(report.with_justification(j)),
        Err(IctError::Group(GroupError::CapExceeded { .. })) => Ok(report),
        Err(e) => Err(e),
    }
}

fn oracle(pair: &PairGH, caps: &Caps) -> Result<IctReport, Failure> {
    let classes = classify_by_conjugation(pair, caps)?;
    Ok(IctReport::from_oracle(pair.index(), pair.h_order(), classes.class_count))
}

fn auto(source: &PairSource, caps: &Caps) -> Result<IctReport, Failure> {
    match source.family() {
        Some(Family::Sym(n)) if *n >= 2 => return Ok(ict_sym(*n)?),
        Some(Family::Alt(n)) if *n >= 4 => return Ok(ict_alt(*n)?),
        _ => {}
    }
    let pair = source.build(caps)?;
    if matches!(source.family(), Some(Family::Dihedral(_) | Family::Pq(..))) {
        match ict_cyclic_for_pair(&pair, caps) {
            Ok(r) => return Ok(r),
            Err(e) => eprintln!("dispatch: cyclic skipped ({e})"),
        }
    }
    let mut unverified = None;
    match theorem6(&pair, caps) {
        Ok(r) if r.justification != Justification::Unverified => return Ok(r),
        Ok(r) => {
            eprintln!("dispatch: theorem6 could not verify its hypothesis within caps");
            unverified = Some(r);
        }
        Err(e) => {
            let capped = Failure::from(e);
            if !capped.is_cap() && !matches!(capped, Failure::Hypothesis(_)) {
                return Err(capped);
            }
            eprintln!("dispatch: theorem6 skipped ({capped})");
            if capped.is_cap() {
                if let Ok(r) = ict_cyclic_for_pair(&pair, caps) {
                    return Ok(r);
                }
            }
        }
    }
    match oracle(&pair, caps) {
        Ok(r) => Ok(r),
        Err(e) if e.is_cap() => match unverified {
            Some(r) => Ok(r),
            None => Err(e),
        },
        Err(e) => Err(e),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// An exact class count.
    Exact,
    /// An orbit count whose equality with the class count was not established.
    Bound,
    /// The engine does not apply or ran out of caps.
    Skipped,
}

#[derive(Serialize, Debug, Clone)]
pub struct CrossRow {
    pub method: &'static str,
    pub kind: RowKind,
    pub value: Option<String>,
    pub note: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct CrossReport {
    pub pair: String,
    pub rows: Vec<CrossRow>,
    /// Whether the two oracle classifiers produced the same partition.
    pub oracle_partitions_agree: Option<bool>,
    /// Whether inversion maps left classes onto right classes.
    pub inverse_map_preserves_classes: Option<bool>,
}

fn row(method: &'static str, result: Result<(BigUint, RowKind, String), Failure>) -> CrossRow {
    match result {
        Ok((v, kind, note)) => CrossRow {
            method,
            kind,
            value: Some(v.to_string()),
            note,
        },
        Err(e) => CrossRow {
            method,
            kind: RowKind::Skipped,
            value: None,
            note: e.to_string(),
        },
    }
}

fn exact(v: BigUint) -> Result<(BigUint, RowKind, String), Failure> {
    Ok((v, RowKind::Exact, String::new()))
}

pub fn crosscheck(source: &PairSource, caps: &Caps) -> Result<CrossReport, Failure> {
    let pair = source.build(caps)?;
    let mut rows = Vec::new();
    match source.family() {
        Some(Family::Sym(n)) => rows.push(row("sym_closed", ict_sym(*n).map_err(Failure::from).and_then(|r| exact(r.value)))),
        Some(Family::Alt(n)) => rows.push(row("alt_closed", ict_alt(*n).map_err(Failure::from).and_then(|r| exact(r.value)))),
        _ => {}
    }
    rows.push(row(
        "cyclic_closed",
        ict_cyclic_for_pair(&pair, caps).map_err(Failure::from).and_then(|r| exact(r.value)),
    ));
    let t6 = normalizer_in_stab(&pair, caps)
        .map_err(IctError::from)
        .and_then(|gamma| Ok((ict_theorem6(&pair, &gamma)?, verify_k_equals_gamma(&pair, &gamma, caps))))
        .map_err(Failure::from)
        .map(|(report, check)| match check {
            Ok(j) => (report.value, RowKind::Exact, format!("{j:?}")),
            Err(e) => (report.value, RowKind::Bound, format!("orbit count only: {e}")),
        });
    rows.push(row("theorem6", t6));

    let conj = classify_by_conjugation(&pair, caps).map_err(Failure::from);
    let iso = classify_by_table_iso(&pair, caps).map_err(Failure::from);
    let oracle_partitions_agree = match (&conj, &iso) {
        (Ok(a), Ok(b)) => Some(same_partition(&a.labels, &b.labels)),
        _ => None,
    };
    rows.push(row("oracle_conjugation", conj.and_then(|c| exact(c.class_count))));
    rows.push(row("oracle_table_iso", iso.and_then(|c| exact(c.class_count))));

    let lr = left_right_agreement(&pair, caps).map_err(Failure::from);
    let inverse_map_preserves_classes = lr.as_ref().ok().map(|r| r.inverse_map_preserves_classes);
    rows.push(row("oracle_right", lr.and_then(|r| exact(r.right_count))));

    if let Some(Family::Sym(n)) = source.family() {
        rows.push(row(
            "census",
            census_left_loops(*n, caps).map_err(Failure::from).and_then(|c| exact(c.class_count)),
        ));
    }
    Ok(CrossReport {
        pair: source.label(),
        rows,
        oracle_partitions_agree,
        inverse_map_preserves_classes,
    })
}

impl CrossReport {
    /// Fails on the first pair of conflicting values, or when too few engines ran.
    pub fn check(&self) -> Result<(), Failure> {
        let parse = |r: &CrossRow| r.value.as_ref().map(|v| v.parse::<BigUint>().expect("decimal"));
        let exact: Vec<(&CrossRow, BigUint)> = self
            .rows
            .iter()
            .filter(|r| r.kind == RowKind::Exact)
            .filter_map(|r| parse(r).map(|v| (r, v)))
            .collect();
        let Some((first, reference)) = exact.first() else {
            return Err(Failure::Cap(format!("{}: no engine ran within caps", self.pair)));
        };
        if exact.len() < 2 {
            return Err(Failure::Cap(format!("{}: only {} ran within caps", self.pair, first.method)));
        }
        for (r, v) in &exact[1..] {
            if v != reference {
                return Err(Failure::Disagreement(format!(
                    "{} = {reference}, {} = {v}",
                    first.method, r.method
                )));
            }
        }
        for r in self.rows.iter().filter(|r| r.kind == RowKind::Bound) {
            let v = parse(r).expect("bound rows carry a value");
            if &v < reference {
                return Err(Failure::Disagreement(format!(
                    "{} orbit count {v} is below {} = {reference}",
                    r.method, first.method
                )));
            }
        }
        if self.oracle_partitions_agree == Some(false) {
            return Err(Failure::Disagreement(
                "oracle_conjugation and oracle_table_iso give different partitions".into(),
            ));
        }
        if self.inverse_map_preserves_classes == Some(false) {
            return Err(Failure::Disagreement("inversion does not map left classes onto right classes".into()));
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = format!("pair: {}\n", self.pair);
        let ran: Vec<&CrossRow> = self.rows.iter().filter(|r| r.value.is_some()).collect();
        let width = self.rows.iter().map(|r| r.method.len()).max().unwrap_or(0);
        for r in &self.rows {
            let value = r.value.as_deref().unwrap_or("-");
            let kind = match r.kind {
                RowKind::Exact => "exact",
                RowKind::Bound => "bound",
                RowKind::Skipped => "skipped",
            };
            let line = format!("{:width$}  {value:>12}  {kind:7}  {}", r.method, r.note);
            out.push_str(line.trim_end());
            out.push('\n');
        }
        // Pairwise matrix over the engines that produced a value.
        out.push_str("\nmatrix:\n");
        let labels: Vec<String> = (1..=ran.len()).map(|i| format!("[{i}]")).collect();
        for (i, a) in ran.iter().enumerate() {
            let cells: Vec<&str> = ran
                .iter()
                .map(|b| if a.value == b.value { "=" } else { "x" })
                .collect();
            out.push_str(&format!("{:>4} {:width$}  {}\n", labels[i], a.method, cells.join(" ")));
        }
        let flag = |f: Option<bool>| match f {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        out.push_str(&format!("oracle partitions agree: {}\n", flag(self.oracle_partitions_agree)));
        out.push_str(&format!(
            "inverse map preserves classes: {}\n",
            flag(self.inverse_map_preserves_classes)
        ));
        out
    }
}
