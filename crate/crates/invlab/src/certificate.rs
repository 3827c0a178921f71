//! Verifiable results: a claimed property plus the inversion family that
//! produces it. A certificate never has to be trusted; [`certificate_holds`]
//! re-applies the family and re-checks the property from scratch.

use crate::connectivity::{is_k_arc_strong, is_k_strong};
use crate::digraph::Digraph;
use crate::family::InversionFamily;
use serde::{Deserialize, Serialize};

/// What the certified digraph is claimed to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Property {
    Acyclic,
    KStrong {
        k: usize,
    },
    KArcStrong {
        k: usize,
    },
    /// The inverted digraph equals this exact target.
    EqualsTarget {
        target_arcs: Vec<(usize, usize)>,
    },
}

/// An inversion family together with the property its application achieves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    pub family: InversionFamily,
    pub family_size: usize,
    /// True only if the producer re-checked the property before returning.
    pub verified: bool,
    /// Which procedure produced this, in plain words.
    pub provenance: String,
}

impl Certificate {
    pub fn new(property: Property, family: InversionFamily, provenance: &str) -> Self {
        let family_size = family.len();
        Certificate {
            property,
            family,
            family_size,
            verified: false,
            provenance: provenance.to_string(),
        }
    }

    /// Checks the certificate against `d` and records the outcome.
    pub fn verify(mut self, d: &Digraph) -> Self {
        self.verified = certificate_holds(d, &self);
        self
    }
}

/// Re-applies the family to `d` and re-checks the claimed property.
pub fn certificate_holds(d: &Digraph, cert: &Certificate) -> bool {
    if cert.family_size != cert.family.len() {
        return false;
    }
    if let Some(v) = cert.family.max_vertex() {
        if v >= d.n() {
            return false;
        }
    }
    let result = cert.family.apply(d);
    match &cert.property {
        Property::Acyclic => result.is_acyclic(),
        Property::KStrong { k } => is_k_strong(&result, *k).holds,
        Property::KArcStrong { k } => is_k_arc_strong(&result, *k).is_ok_and(|v| v.holds),
        Property::EqualsTarget { target_arcs } => {
            let mut got: Vec<(usize, usize)> = result.arcs().collect();
            let mut want = target_arcs.clone();
            got.sort_unstable();
            want.sort_unstable();
            got == want
        }
    }
}
