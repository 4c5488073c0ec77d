/// Outcome of a decision procedure: a verdict plus, on failure, the evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }

    pub fn from_witness(witness: Option<W>) -> Self {
        match witness {
            Some(w) => Verdict::fail(w),
            None => Verdict::pass(),
        }
    }

    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        Verdict { holds: self.holds, witness: self.witness.map(f) }
    }
}
