use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::group::{nilpotency_class, FiniteGroup};
use crate::lattice::{BirkhoffWitness, Chain, CoverWitness, TripleWitness};

use super::TopologyLattice;

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub uniform: bool,
    pub length: Option<usize>,
    /// A shortest and a longest maximal chain when lengths differ.
    pub witness: Option<(Chain, Chain)>,
    /// First interval, if any, whose maximal chains differ in length.
    pub violation: Option<(usize, usize)>,
}

/// Lattice-theoretic summary of `L_G`. Element indices refer to `kernels`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(skip_serializing_if = "String::is_empty")]
    pub group: String,
    pub order: usize,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub topologies: usize,
    pub kernels: Vec<Vec<usize>>,
    pub height: usize,
    pub modular: bool,
    pub distributive: bool,
    pub semimodular: bool,
    pub dually_semimodular: bool,
    pub birkhoff: bool,
    pub dual_birkhoff: bool,
    pub modular_witness: Option<TripleWitness>,
    pub distributive_witness: Option<TripleWitness>,
    pub semimodular_witness: Option<CoverWitness>,
    pub dually_semimodular_witness: Option<CoverWitness>,
    pub birkhoff_witness: Option<BirkhoffWitness>,
    pub dual_birkhoff_witness: Option<BirkhoffWitness>,
    /// Maximal chains from the anti-discrete to the discrete topology.
    pub jordan_holder: ChainReport,
    /// `k_maximal[k]`: elements all of whose maximal chains to the top
    /// have length `k`.
    pub k_maximal: Vec<Vec<usize>>,
    /// Expected properties that failed: modularity for abelian groups,
    /// semimodularity and equal chain lengths for nilpotent ones.
    pub violations: Vec<String>,
}

impl AnalysisReport {
    pub fn with_group(mut self, name: &str) -> Self {
        self.group = name.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn analyze(g: &FiniteGroup, caps: &Caps) -> Result<AnalysisReport> {
    let l = TopologyLattice::new(g, caps)?;
    Ok(analyze_lattice(&l))
}

pub fn analyze_lattice(l: &TopologyLattice) -> AnalysisReport {
    let g = l.group();
    let lat = l.lattice();
    let abelian = g.is_abelian();
    let class = nilpotency_class(g);

    let modular_witness = lat.modular_witness();
    let distributive_witness = lat.distributive_witness();
    let semimodular_witness = lat.semimodular_witness();
    let dually_semimodular_witness = lat.dually_semimodular_witness();
    let birkhoff_witness = lat.birkhoff_witness();
    let dual_birkhoff_witness = lat.dual_birkhoff_witness();
    let jh = lat
        .jordan_holder_check(lat.bottom(), lat.top())
        .expect("bottom lies below top");
    let jordan_holder = ChainReport {
        uniform: jh.is_uniform(),
        length: jh.length,
        witness: jh.witness,
        violation: lat.jordan_holder_violation(),
    };
    let height = lat.height();
    let k_maximal = (0..=height).map(|k| lat.k_maximal_elements(k)).collect();

    let mut violations = Vec::new();
    if abelian && modular_witness.is_some() {
        violations.push("abelian group with non-modular lattice".to_string());
    }
    if class.is_some() && semimodular_witness.is_some() {
        violations.push("nilpotent group with non-semimodular lattice".to_string());
    }
    if class.is_some() && !(jordan_holder.uniform && jordan_holder.violation.is_none()) {
        violations.push("nilpotent group with maximal chains of different lengths".to_string());
    }

    AnalysisReport {
        group: String::new(),
        order: g.order(),
        abelian,
        nilpotency_class: class,
        topologies: l.len(),
        kernels: l.kernels().iter().map(|k| k.to_vec()).collect(),
        height,
        modular: modular_witness.is_none(),
        distributive: distributive_witness.is_none(),
        semimodular: semimodular_witness.is_none(),
        dually_semimodular: dually_semimodular_witness.is_none(),
        birkhoff: birkhoff_witness.is_none(),
        dual_birkhoff: dual_birkhoff_witness.is_none(),
        modular_witness,
        distributive_witness,
        semimodular_witness,
        dually_semimodular_witness,
        birkhoff_witness,
        dual_birkhoff_witness,
        jordan_holder,
        k_maximal,
        violations,
    }
}
