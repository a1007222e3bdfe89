use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use toplat::corpus::{self, Entry};
use toplat::duality::comfort_ross_map;
use toplat::pontryagin::verify_roundtrip;
use toplat::report::CheckReport;
use toplat::settop::verify_classical_facts;
use toplat::topology::{
    prodanov_lattice, verify_cover_transfer, verify_meet_basis, verify_merzon,
    verify_product_theorem, verify_quotient_meet, verify_restriction_join, verify_saturation_join,
    verify_semimodular_transfer,
};
use toplat::{Caps, FiniteGroup, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Merzon,
    Oct11,
    CoverTransfer,
    MeetBasis,
    SemimodTransfer,
    Th0Product,
    ComfortRoss,
    PontryaginRoundtrip,
    ToplatticeClassical,
    Prodanov,
}

type Check = fn(&FiniteGroup, &Caps) -> Result<CheckReport>;

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }

    /// Largest corpus order swept when no limit is given.
    pub fn default_max_order(self) -> usize {
        match self {
            Suite::SemimodTransfer | Suite::PontryaginRoundtrip => 24,
            Suite::ComfortRoss => 32,
            Suite::Th0Product => 72,
            _ => 16,
        }
    }

    /// The standard groups this suite runs on, up to `max_order`.
    pub fn default_corpus(self, max_order: usize) -> Result<Vec<Entry>> {
        match self {
            Suite::Th0Product => {
                let all = corpus::from_names(&["Z 3 x Q8", "Z^k 3 2 x D 4", "Z 5 x Q8"])?;
                Ok(all.into_iter().filter(|e| e.order() <= max_order).collect())
            }
            Suite::ComfortRoss => corpus::abelian(max_order),
            Suite::ToplatticeClassical => Ok(Vec::new()),
            _ => corpus::standard(max_order),
        }
    }

    fn checks(self) -> &'static [Check] {
        match self {
            Suite::Merzon => &[verify_merzon],
            Suite::Oct11 => &[
                verify_restriction_join,
                verify_quotient_meet,
                verify_saturation_join,
            ],
            Suite::CoverTransfer => &[verify_cover_transfer],
            Suite::MeetBasis => &[verify_meet_basis],
            Suite::SemimodTransfer => &[verify_semimodular_transfer],
            Suite::Th0Product => &[verify_product_theorem],
            Suite::PontryaginRoundtrip => &[verify_roundtrip],
            Suite::ComfortRoss | Suite::ToplatticeClassical | Suite::Prodanov => &[],
        }
    }

    /// Runs the suite. `points` is the set size for the set-topology suite.
    pub fn run(self, entries: &[Entry], caps: &Caps, points: usize) -> Result<SuiteSummary> {
        let mut s = SuiteSummary::new(self);
        match self {
            Suite::ToplatticeClassical => {
                let r = verify_classical_facts(points)?;
                let ok = r.operations_agree && (points < 3 || !r.distributive) && r.dual_birkhoff;
                let witness = r
                    .dual_birkhoff_witness
                    .as_ref()
                    .map(|[a, b]| format!("dual Birkhoff fails for open sets {a:?} and {b:?}"));
                s.push(
                    format!("{points} points"),
                    ok,
                    1,
                    witness,
                    serde_json::to_value(&r)?,
                );
            }
            Suite::Prodanov => {
                for e in entries {
                    s.groups += 1;
                    let (_, r) = prodanov_lattice(&e.group, caps)?;
                    let ok = r.closure_operator;
                    let witness = (!ok).then(|| "closure map is not a closure operator".into());
                    s.push(e.name.clone(), ok, 1, witness, serde_json::to_value(&r)?);
                }
            }
            Suite::ComfortRoss => {
                for e in entries.iter().filter(|e| e.is_abelian()) {
                    s.groups += 1;
                    s.push_report(e, comfort_ross_map(&e.group, caps)?.report)?;
                }
            }
            _ => {
                for e in entries {
                    s.groups += 1;
                    for check in self.checks() {
                        s.push_report(e, check(&e.group, caps)?)?;
                    }
                }
            }
        }
        Ok(s)
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub passed: bool,
    pub groups: usize,
    pub cases: u64,
    pub failures: Vec<String>,
    pub reports: Vec<Value>,
}

impl SuiteSummary {
    fn new(suite: Suite) -> Self {
        SuiteSummary {
            suite: suite.name(),
            passed: true,
            groups: 0,
            cases: 0,
            failures: Vec::new(),
            reports: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: String,
        ok: bool,
        cases: u64,
        witness: Option<String>,
        mut report: Value,
    ) {
        self.cases += cases;
        self.passed &= ok;
        if !ok {
            let w = witness.unwrap_or_default();
            self.failures.push(format!("{name}: {w}"));
        }
        if let Value::Object(fields) = &mut report {
            fields.entry("group").or_insert_with(|| json!(name));
        }
        self.reports.push(report);
    }

    fn push_report(&mut self, e: &Entry, r: CheckReport) -> Result<()> {
        let witness = r.violations.first().map(|v| {
            format!(
                "{} {} ({} violations)",
                r.check,
                serde_json::to_string(v).unwrap_or_default(),
                r.violation_count
            )
        });
        let (ok, cases) = (r.passed, r.cases);
        self.push(
            e.name.clone(),
            ok,
            cases,
            witness,
            serde_json::to_value(r.with_group(&e.name))?,
        );
        Ok(())
    }
}
