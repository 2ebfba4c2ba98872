#pragma once

// Golden word/stem pairs sampled from the published Porter test
// vocabulary and its reference output list. Covers every rule family:
// plural handling, -eed/-ed/-ing with the at/bl/iz, double-consonant and
// cvc fixups, y->i, the step 2-4 suffix ladders (including the -bli and
// -logi rules of the reference algorithm), and the final -e / -ll
// removals.

#include <string_view>
#include <utility>

namespace testutil {

inline constexpr std::pair<std::string_view, std::string_view> porter_golden[] = {
    // Short words and no-op cases.
    {"a", "a"},
    {"be", "be"},
    {"sky", "sky"},
    {"cats", "cat"},
    {"abba", "abba"},
    {"abbot", "abbot"},
    {"abbots", "abbot"},
    {"abash", "abash"},
    {"abandon", "abandon"},
    {"aaron", "aaron"},
    {"sing", "sing"},
    {"bled", "bled"},
    {"feed", "feed"},
    {"caress", "caress"},
    {"region", "region"},
    {"christian", "christian"},
    // Step 1a.
    {"caresses", "caress"},
    {"ponies", "poni"},
    {"ties", "ti"},
    {"flies", "fli"},
    {"dies", "di"},
    {"abbeys", "abbei"},
    {"churches", "church"},
    {"possesses", "possess"},
    {"abatements", "abat"},
    {"meetings", "meet"},
    {"troubles", "troubl"},
    // Step 1b with fixups.
    {"agreed", "agre"},
    {"abandoned", "abandon"},
    {"abandoning", "abandon"},
    {"plastered", "plaster"},
    {"motoring", "motor"},
    {"conflated", "conflat"},
    {"troubled", "troubl"},
    {"sized", "size"},
    {"hopping", "hop"},
    {"tanned", "tan"},
    {"falling", "fall"},
    {"hissing", "hiss"},
    {"fizzed", "fizz"},
    {"failing", "fail"},
    {"filing", "file"},
    {"mating", "mate"},
    {"matting", "mat"},
    {"meeting", "meet"},
    {"milling", "mill"},
    {"messing", "mess"},
    {"running", "run"},
    {"abated", "abat"},
    {"abating", "abat"},
    {"abbreviated", "abbrevi"},
    {"abed", "ab"},
    {"absorbed", "absorb"},
    {"acting", "act"},
    {"arguing", "argu"},
    {"possessed", "possess"},
    {"proceeded", "proceed"},
    {"snowed", "snow"},
    {"boxed", "box"},
    {"played", "plai"},
    {"enjoyed", "enjoi"},
    {"crying", "cry"},
    {"dying", "dy"},
    {"controlling", "control"},
    {"rolling", "roll"},
    {"accompanying", "accompani"},
    // Step 1c.
    {"happy", "happi"},
    {"abbey", "abbei"},
    {"accuracy", "accuraci"},
    // Step 2 ladders.
    {"relational", "relat"},
    {"conditional", "condit"},
    {"rational", "ration"},
    {"national", "nation"},
    {"agency", "agenc"},
    {"hesitancy", "hesit"},
    {"digitizer", "digit"},
    {"possibly", "possibl"},
    {"conformably", "conform"},
    {"radically", "radic"},
    {"differently", "differ"},
    {"vilely", "vile"},
    {"analogously", "analog"},
    {"vietnamization", "vietnam"},
    {"generalization", "gener"},
    {"characterization", "character"},
    {"predication", "predic"},
    {"administration", "administr"},
    {"operator", "oper"},
    {"oscillators", "oscil"},
    {"feudalism", "feudal"},
    {"decisiveness", "decis"},
    {"hopefulness", "hope"},
    {"callousness", "callous"},
    {"formality", "formal"},
    {"sensitivity", "sensit"},
    {"relativity", "rel"},
    {"sensibility", "sensibl"},
    {"abilities", "abil"},
    {"ability", "abil"},
    {"archaeology", "archaeolog"},
    {"geology", "geologi"},
    {"absolutely", "absolut"},
    // Step 3.
    {"triplicate", "triplic"},
    {"formative", "form"},
    {"formalize", "formal"},
    {"electricity", "electr"},
    {"electrical", "electr"},
    {"hopeful", "hope"},
    {"goodness", "good"},
    {"dreadful", "dread"},
    {"happiness", "happi"},
    {"willingness", "willing"},
    {"relative", "rel"},
    // Step 4.
    {"revival", "reviv"},
    {"allowance", "allow"},
    {"inference", "infer"},
    {"airliner", "airlin"},
    {"gyroscopic", "gyroscop"},
    {"adjustable", "adjust"},
    {"defensible", "defens"},
    {"irritant", "irrit"},
    {"replacement", "replac"},
    {"adjustment", "adjust"},
    {"dependent", "depend"},
    {"adoption", "adopt"},
    {"adopted", "adopt"},
    {"homologous", "homolog"},
    {"analogous", "analog"},
    {"communism", "commun"},
    {"activate", "activ"},
    {"angularity", "angular"},
    {"effective", "effect"},
    {"bowdlerize", "bowdler"},
    {"conclusion", "conclus"},
    {"action", "action"},
    {"element", "element"},
    {"government", "govern"},
    {"agreement", "agreement"},
    {"argument", "argument"},
    {"runner", "runner"},
    {"general", "gener"},
    {"characteristic", "characterist"},
    {"derived", "deriv"},
    // Step 5.
    {"probate", "probat"},
    {"rate", "rate"},
    {"cease", "ceas"},
    {"abate", "abat"},
    {"abase", "abas"},
    {"abide", "abid"},
    {"achieve", "achiev"},
    {"trouble", "troubl"},
    {"abatement", "abat"},
    {"abasement", "abas"},
    {"abates", "abat"},
    {"abbominable", "abbomin"},
};

}  // namespace testutil
