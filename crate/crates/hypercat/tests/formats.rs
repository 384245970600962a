// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use hypercat::core::corpus::{dagger_signature, hypergraph_signature, random_dagger_model, random_int_model, random_term, TermShape};
use hypercat::core::semiring::{BigInt, GaussianRational};
use hypercat::core::{decide_equal, parse, Model};
use hypercat::formats::{DiagramFile, ModelFile, SignatureFile};
use hypercat::report::{replay, ReportFile};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn signatures_round_trip() {
    for sig in [hypergraph_signature(), dagger_signature()] {
        let text = serde_json::to_string(&SignatureFile::from_signature(&sig)).unwrap();
        let back: SignatureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_signature().unwrap(), sig);
    }
}

#[test]
fn dangling_partners_are_rejected() {
    let text = r#"{"objects":["A"],"dagger":true,"generators":[{"name":"f","dom":["A"],"cod":["A"],"dagger_of":"g"}]}"#;
    let file: SignatureFile = serde_json::from_str(text).unwrap();
    assert!(file.to_signature().is_err());
}

#[test]
fn models_need_every_generator() {
    let sig = hypergraph_signature();
    let text = r#"{"objects":{"A":2,"B":1},"generators":{"f":[]}}"#;
    let file: ModelFile = serde_json::from_str(text).unwrap();
    assert!(file.to_model::<BigInt>(&sig).is_err());
    let text = r#"{"objects":{"A":2,"B":1},"generators":{"f":[],"g":[],"k":[]}}"#;
    let file: ModelFile = serde_json::from_str(text).unwrap();
    assert!(file.to_model::<BigInt>(&sig).is_err());
    let text = r#"{"objects":{"A":2,"B":1},"generators":{"f":[{"row":["2"],"col":["0"],"value":"1"}],"g":[]}}"#;
    let file: ModelFile = serde_json::from_str(text).unwrap();
    assert!(file.to_model::<BigInt>(&sig).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn diagrams_round_trip(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_term(&sig, &mut rng, TermShape::default()).to_diagram(&sig).unwrap();
        let text = serde_json::to_string(&DiagramFile::from_diagram(&d)).unwrap();
        let back: DiagramFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_diagram().unwrap(), d);
    }

    #[test]
    fn int_models_round_trip(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_int_model(&sig, &mut rng, 3, 4);
        let text = serde_json::to_string(&ModelFile::from_model(&m, &sig)).unwrap();
        let back: ModelFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_model::<BigInt>(&sig).unwrap(), m);
    }

    #[test]
    fn gaussian_models_round_trip(seed in any::<u64>()) {
        let sig = dagger_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_dagger_model(&sig, &mut rng, 3, 4);
        let text = serde_json::to_string(&ModelFile::from_model(&m, &sig)).unwrap();
        let back: Model<GaussianRational> = serde_json::from_str::<ModelFile>(&text).unwrap().to_model(&sig).unwrap();
        prop_assert!(back.validate(&sig, true).is_ok());
        prop_assert_eq!(back, m);
    }
}

#[test]
fn reports_round_trip() {
    let sig = dagger_signature();
    let pairs = [("s ; h", "h ; h_dag ; h"), ("h", "h_dag^"), ("delta[A] ; s * s ; mu[A]", "s ; s")];
    for (l, r) in pairs {
        let ld = parse(l, &sig).unwrap().to_diagram(&sig).unwrap();
        let rd = parse(r, &sig).unwrap().to_diagram(&sig).unwrap();
        let report = decide_equal(&sig, &ld, &rd, true, 3).unwrap();
        let file = ReportFile::new(&report, &sig, &ld, &rd, Some((l.into(), r.into())));
        let back = ReportFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(replay(&back).unwrap(), report.verdict);
    }
}
