//! The based-matrix interchange format: a JSON document with fields `ring`
//! ("Z" or "Z2"), `labels` (strings, first entry "s") and `b` (the row-major
//! entry table in label order).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::matrix::BasedMatrix;
use crate::ring::Ring;

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    ring: Ring,
    labels: Vec<Label>,
    b: Vec<Vec<i64>>,
}

pub fn matrix_to_json(t: &BasedMatrix) -> String {
    let doc = MatrixDoc {
        ring: t.ring(),
        labels: t.labels().to_vec(),
        b: t.rows().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("matrix serializes")
}

pub fn matrix_from_json(text: &str) -> Result<BasedMatrix> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::MatrixDocument(e.to_string()))?;
    BasedMatrix::new(doc.labels, doc.ring, doc.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        for t in [
            fixtures::flat_figure_matrix(),
            fixtures::example_matrix_b(),
            fixtures::knot_4_85(),
        ] {
            let json = matrix_to_json(&t);
            assert_eq!(matrix_from_json(&json).unwrap(), t);
        }
    }

    #[test]
    fn hand_written_document() {
        let t = matrix_from_json(
            r#"{"ring":"Z2","labels":["s","a"],"b":[[0,1],[1,0]]}"#,
        )
        .unwrap();
        assert_eq!(t.size(), 2);
        assert_eq!(t.value(&Label::named("a"), &Label::S).unwrap(), 1);
    }

    #[test]
    fn invalid_documents_are_rejected() {
        // not skew-symmetric over Z
        assert!(matrix_from_json(r#"{"ring":"Z","labels":["s","a"],"b":[[0,1],[1,0]]}"#).is_err());
        // entry outside Z2
        assert!(matrix_from_json(r#"{"ring":"Z2","labels":["s","a"],"b":[[0,2],[2,0]]}"#).is_err());
        // missing basepoint
        assert!(matrix_from_json(r#"{"ring":"Z2","labels":["a","b"],"b":[[0,1],[1,0]]}"#).is_err());
        // malformed json
        assert!(matrix_from_json("{").is_err());
    }
}
