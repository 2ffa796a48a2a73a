use gamoid::error::Error;
use gamoid::frontend::{
    builtin_model, load, parse, Decl, Homs, Kind, ModelFile, MoveDecl, OccDecl, Pointer, Polarity,
    BUILTIN_MODEL,
};
use gamoid::games::SizeGuard;
use proptest::prelude::*;

fn name() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => "[a-z_][a-z0-9_']{0,5}",
        1 => "[0-9]{1,2}",
        1 => "[a-z]{1,3}-[a-z0-9]{1,3}",
        1 => "[ -~]{0,6}",
        1 => prop::sample::select(vec!["game", "on", "plays", "terminal", "a~b#0", "x\"y\\z"])
            .prop_map(String::from),
    ]
}

fn names(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(name(), 0..=max)
}

fn pairs(max: usize) -> impl Strategy<Value = Vec<(String, String)>> {
    prop::collection::vec((name(), name()), 0..=max)
}

fn play() -> impl Strategy<Value = Vec<OccDecl>> {
    let pointer = prop_oneof![
        Just(Pointer::Default),
        Just(Pointer::Initial),
        (0usize..9).prop_map(Pointer::At),
    ];
    prop::collection::vec((name(), pointer).prop_map(|(id, pointer)| OccDecl { id, pointer }), 1..4)
}

fn plays() -> impl Strategy<Value = Vec<Vec<OccDecl>>> {
    prop::collection::vec(play(), 0..3)
}

fn move_decl() -> impl Strategy<Value = MoveDecl> {
    (name(), any::<bool>(), any::<bool>(), names(2)).prop_map(|(id, o, q, enablers)| MoveDecl {
        id,
        polarity: if o { Polarity::O } else { Polarity::P },
        kind: if q { Kind::Q } else { Kind::A },
        enablers,
    })
}

fn decl() -> impl Strategy<Value = Decl> {
    let homs = prop_oneof![
        Just(Homs::Canonical),
        Just(Homs::Discrete),
        names(3).prop_map(Homs::Explicit),
    ];
    prop_oneof![
        (name(), prop::collection::vec(move_decl(), 0..4), plays())
            .prop_map(|(name, moves, plays)| Decl::Game { name, moves, plays }),
        (name(), name(), plays()).prop_map(|(name, game, plays)| Decl::Strategy { name, game, plays }),
        (name(), name(), name(), pairs(3))
            .prop_map(|(name, source, target, map)| Decl::Iso { name, source, target, map }),
        (name(), name(), names(3), homs)
            .prop_map(|(name, game, objects, homs)| Decl::Gamoid { name, game, objects, homs }),
        (name(), name(), pairs(2), pairs(2)).prop_map(|(name, base, fibers, transports)| {
            Decl::Family { name, base, fibers, transports }
        }),
        (name(), name(), name(), pairs(2), pairs(2)).prop_map(
            |(name, source, target, objects, arrows)| Decl::Morphism { name, source, target, objects, arrows }
        ),
        (name(), 0usize..4, names(3)).prop_map(|(name, level, codes)| Decl::Registry { name, level, codes }),
        (name(), names(3)).prop_map(|(name, run)| Decl::Suite { name, run }),
    ]
}

proptest! {
    #[test]
    fn parser_is_total(src in "[ -~\n]{0,200}") {
        let _ = parse(&src);
    }

    #[test]
    fn parser_is_total_on_near_misses(cut in 0usize..400, junk in "[ -~]{0,3}") {
        let mut src: String = BUILTIN_MODEL.chars().take(cut).collect();
        src.push_str(&junk);
        if let Err(d) = parse(&src) {
            prop_assert!(d.line >= 1 && d.col >= 1);
        }
    }

    #[test]
    fn printing_then_parsing_is_the_identity(decls in prop::collection::vec(decl(), 0..6)) {
        let file = ModelFile { decls };
        let printed = file.to_string();
        let back = parse(&printed);
        prop_assert_eq!(back.as_ref(), Ok(&file), "{}", printed);
    }
}

#[test]
fn builtin_model_loads() {
    let m = builtin_model();
    assert_eq!(parse(BUILTIN_MODEL).unwrap().decls.len(), 7);
    assert_eq!(m.gamoid("BPT").unwrap().objects().len(), 1);
    assert_eq!(m.gamoid("N2C").unwrap().arrow_count(), 4);
    assert!(m.gamoid("terminal").is_some());
}

#[test]
fn unknown_references_are_named() {
    let src = "strategy s on NOPE { plays ; }";
    match load(src, &SizeGuard::default()) {
        Err(Error::Resolution { decl, kind, reference }) => {
            assert_eq!((decl.as_str(), kind.as_str(), reference.as_str()), ("strategy `s`", "game", "NOPE"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn quoted_labels_reach_completed_arrows() {
    let src = format!(
        "{BUILTIN_MODEL}\n\
         morphism m : N2C -> N2C {{ objects zero -> one, one -> zero; arrows \"zero~one#0\" -> \"one~zero#0\"; }}\n\
         morphism r : BPT -> BPT {{ objects bullet -> bullet; arrows \"bullet~bullet#1\" -> \"bullet~bullet#1\"; }}\n\
         family F over N2C {{ fiber zero = BPT; fiber one = BPT; transport \"zero~one#0\" = r; }}\n"
    );
    let m = load(&src, &SizeGuard::default()).unwrap();
    let f = m.family("F").unwrap();
    assert_eq!(f.transports().len(), 4);
    let mm = m.morphism("m").unwrap();
    assert_eq!(mm.map().arrows.len(), 4);
}
