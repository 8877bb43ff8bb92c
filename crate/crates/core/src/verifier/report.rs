use std::fmt;

use crate::linalg::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A precondition of the statement does not hold for this input.
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Counterexample data: basis indices and exact values, enough to replay
/// the failure with the algebra operations alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub description: String,
    pub indices: Vec<usize>,
    pub values: Vec<Rational>,
}

impl Witness {
    pub fn new(description: impl Into<String>, indices: Vec<usize>, values: Vec<Rational>) -> Self {
        Self {
            description: description.into(),
            indices,
            values,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (indices {:?}; values [", self.description, self.indices)?;
        crate::derivations::write_vector(f, &self.values)?;
        write!(f, "])")
    }
}

/// Outcome of one check. A failing report always carries a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub check_name: String,
    pub subject: String,
    pub parameters: Vec<Rational>,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    /// Computed values, reasons for non-applicability and the scope of
    /// what was certified.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass(check_name: &str, subject: &str, parameters: Vec<Rational>) -> Self {
        Self {
            check_name: check_name.to_string(),
            subject: subject.to_string(),
            parameters,
            status: CheckStatus::Pass,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(check_name: &str, subject: &str, parameters: Vec<Rational>, witness: Witness) -> Self {
        Self {
            status: CheckStatus::Fail,
            witness: Some(witness),
            ..Self::pass(check_name, subject, parameters)
        }
    }

    pub fn not_applicable(check_name: &str, subject: &str, parameters: Vec<Rational>, reason: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::NotApplicable,
            notes: vec![format!("precondition: {}", reason.into())],
            ..Self::pass(check_name, subject, parameters)
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} on {}", self.status, self.check_name, self.subject)?;
        if !self.parameters.is_empty() {
            write!(f, " with (")?;
            crate::derivations::write_vector(f, &self.parameters)?;
            write!(f, ")")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}
