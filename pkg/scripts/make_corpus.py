#!/usr/bin/env python3
"""Regenerate the bundled demo data.

Writes the training and test corpora, the confusion-set file and the
default tag dictionary.  Everything is driven by one seeded RNG, so the
output is reproducible byte for byte; the committed files are this
script's output and the golden accuracy numbers in the test suite
depend on them.  The text is synthetic (template-filled) and dedicated
to the public domain.

Usage: python scripts/make_corpus.py
"""

from __future__ import annotations

import random
import textwrap
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

SEED = 94021
TRAIN_SENTENCES = 4500
TEST_SENTENCES = 1300
SENTENCES_PER_PARAGRAPH = 6
WRAP_WIDTH = 88

# Tag inventory: 40 names, upper-case by format rule.  The first 28 are
# conventional single categories, the last 12 are compound tags for
# contractions and possessives.
INVENTORY = [
    "DET", "NS", "NPL", "NP", "PRO", "PPOS", "V", "VPAST", "VING", "VEN",
    "ADJ", "ADV", "PREP", "CONJ", "NUM", "ORD", "NEG", "TO", "WH", "INT",
    "EX", "PART", "FW", "BE", "HAVE", "DO", "MODAL", "PUNC",
    "V+PRO", "BE+NEG", "HAVE+NEG", "DO+NEG", "MODAL+NEG", "PRO+BE",
    "PRO+HAVE", "PRO+MODAL", "NP+POS", "NS+POS", "THERE+BE", "WH+BE",
]

LEXICON: dict[str, str] = {
    # determiners and possessives
    "the": "DET", "a": "DET", "an": "DET", "this": "DET",
    "that": "DET,CONJ,PRO", "every": "DET", "some": "DET", "no": "DET",
    "another": "DET", "each": "DET", "all": "DET,ADV",
    "his": "PPOS", "her": "PPOS,PRO", "their": "PPOS", "its": "PPOS",
    "my": "PPOS", "our": "PPOS", "your": "PPOS",
    # pronouns
    "he": "PRO", "she": "PRO", "it": "PRO", "they": "PRO", "we": "PRO",
    "i": "PRO", "you": "PRO", "them": "PRO", "him": "PRO", "us": "PRO",
    "anyone": "PRO", "nobody": "PRO", "everyone": "PRO", "nothing": "PRO",
    # prepositions
    "of": "PREP", "in": "PREP", "on": "PREP", "from": "PREP",
    "with": "PREP", "for": "PREP", "over": "PREP", "under": "PREP",
    "near": "PREP", "across": "PREP", "into": "PREP", "through": "PREP",
    "during": "PREP", "after": "PREP", "before": "PREP,CONJ",
    "behind": "PREP", "by": "PREP", "at": "PREP", "along": "PREP",
    "until": "PREP,CONJ", "about": "PREP", "without": "PREP",
    # conjunctions and clause markers
    "and": "CONJ", "or": "CONJ", "but": "CONJ", "while": "CONJ",
    "when": "WH,CONJ", "because": "CONJ", "if": "CONJ", "so": "CONJ,ADV",
    "than": "CONJ", "as": "CONJ,PREP", "whether": "CONJ",
    # auxiliaries and modals
    "is": "BE", "are": "BE", "was": "BE", "were": "BE", "be": "BE",
    "been": "BE", "being": "BE", "am": "BE",
    "have": "HAVE", "has": "HAVE", "had": "HAVE",
    "do": "DO", "does": "DO", "did": "DO",
    "will": "MODAL", "would": "MODAL", "can": "MODAL", "could": "MODAL",
    "may": "MODAL", "might": "MODAL", "must": "MODAL", "should": "MODAL",
    "not": "NEG", "to": "TO,PREP", "there": "EX,ADV",
    # contractions and possessives (compound tags)
    "i'd": "PRO+MODAL", "she'd": "PRO+MODAL", "we'll": "PRO+MODAL",
    "won't": "MODAL+NEG", "can't": "MODAL+NEG", "couldn't": "MODAL+NEG",
    "wouldn't": "MODAL+NEG", "wasn't": "BE+NEG", "isn't": "BE+NEG",
    "doesn't": "DO+NEG", "didn't": "DO+NEG", "hasn't": "HAVE+NEG",
    "they're": "PRO+BE", "you're": "PRO+BE", "i'm": "PRO+BE",
    "it's": "PRO+BE", "i've": "PRO+HAVE", "we've": "PRO+HAVE",
    "let's": "V+PRO", "there's": "THERE+BE", "what's": "WH+BE",
    "baker's": "NS+POS", "miller's": "NS+POS",
    # wh words
    "who": "WH,PRO", "what": "WH,PRO", "where": "WH", "why": "WH",
    "how": "WH",
    # numbers and ordinals
    "two": "NUM", "three": "NUM", "ten": "NUM",
    "first": "ORD", "second": "ORD", "last": "ORD,ADJ",
    # adverbs
    "very": "ADV", "quite": "ADV", "slowly": "ADV", "quickly": "ADV",
    "often": "ADV", "never": "ADV", "always": "ADV", "still": "ADV",
    "again": "ADV", "soon": "ADV", "twice": "ADV", "away": "ADV",
    "aloud": "ADV", "finally": "ADV", "early": "ADJ,ADV",
    "late": "ADJ,ADV", "north": "ADV,NS", "west": "ADV,NS",
    "then": "ADV", "now": "ADV", "here": "ADV", "too": "ADV",
    "anymore": "ADV", "out": "PART,ADV", "off": "PART,PREP",
    "up": "PART,PREP,ADV", "down": "PART,PREP,ADV",
    "oh": "INT", "adios": "FW", "well": "NS,ADV,INT",
    # adjectives
    "hot": "ADJ", "dry": "ADJ,V", "vast": "ADJ", "arid": "ADJ",
    "empty": "ADJ", "silent": "ADJ", "burning": "ADJ,VING",
    "golden": "ADJ", "cold": "ADJ,NS", "wet": "ADJ", "gray": "ADJ",
    "stormy": "ADJ", "foul": "ADJ", "mild": "ADJ", "clear": "ADJ,V",
    "bright": "ADJ", "sweet": "ADJ", "rich": "ADJ", "creamy": "ADJ",
    "warm": "ADJ,V", "fresh": "ADJ", "old": "ADJ", "new": "ADJ",
    "long": "ADJ,ADV", "small": "ADJ", "little": "ADJ", "quiet": "ADJ",
    "lasting": "ADJ,VING", "uneasy": "ADJ", "famous": "ADJ",
    "tired": "ADJ,VEN", "thirsty": "ADJ", "scarce": "ADJ",
    "missing": "ADJ,VING", "torn": "ADJ,VEN", "broken": "ADJ,VEN",
    "worst": "ADJ", "high": "ADJ", "green": "ADJ", "muddy": "ADJ",
    "low": "ADJ,ADV", "safe": "ADJ", "true": "ADJ", "unclear": "ADJ",
    "ready": "ADJ", "open": "ADJ,V", "thin": "ADJ", "fragile": "ADJ",
    "whole": "ADJ",
    # nouns, singular
    "desert": "NS,V", "dessert": "NS", "peace": "NS", "piece": "NS",
    "weather": "NS,V",
    "cake": "NS", "pie": "NS", "pudding": "NS", "tart": "NS",
    "custard": "NS", "sugar": "NS", "cream": "NS", "honey": "NS",
    "chocolate": "NS", "cinnamon": "NS", "coffee": "NS", "flour": "NS",
    "salt": "NS", "dinner": "NS", "supper": "NS", "lunch": "NS",
    "sand": "NS", "dust": "NS", "heat": "NS", "oasis": "NS",
    "canyon": "NS", "trail": "NS", "wind": "NS,V", "storm": "NS",
    "rain": "NS,V", "snow": "NS,V", "fog": "NS", "sky": "NS",
    "forecast": "NS,V", "winter": "NS", "summer": "NS", "spring": "NS",
    "autumn": "NS", "morning": "NS", "evening": "NS", "night": "NS",
    "noon": "NS", "dusk": "NS", "dawn": "NS", "midnight": "NS",
    "camel": "NS", "lizard": "NS", "hawk": "NS", "fox": "NS",
    "mule": "NS", "caravan": "NS", "treaty": "NS", "truce": "NS",
    "war": "NS", "border": "NS", "accord": "NS", "envoy": "NS",
    "minister": "NS", "nation": "NS", "corps": "NS", "justice": "NS",
    "king": "NS", "neighbor": "NS", "generation": "NS", "market": "NS",
    "town": "NS", "village": "NS", "harbor": "NS", "valley": "NS",
    "inn": "NS", "mill": "NS", "bridge": "NS", "river": "NS",
    "coast": "NS", "road": "NS", "boat": "NS", "crew": "NS",
    "captain": "NS", "tower": "NS", "fence": "NS", "letter": "NS",
    "news": "NS", "word": "NS,V", "water": "NS", "army": "NS",
    "soldier": "NS", "post": "NS,V", "edge": "NS", "horizon": "NS",
    "wheel": "NS", "lamp": "NS", "garden": "NS", "bell": "NS",
    "chimney": "NS", "smoke": "NS,V", "coin": "NS", "innkeeper": "NS",
    "miller": "NS", "harvest": "NS,V", "barn": "NS", "gate": "NS",
    "star": "NS", "song": "NS", "sea": "NS", "child": "NS",
    "school": "NS", "year": "NS", "week": "NS", "day": "NS",
    "time": "NS", "story": "NS", "plan": "NS,V", "sum": "NS",
    "dog": "NS", "loaf": "NS", "farmer": "NS", "grandmother": "NS",
    "cook": "NS,V", "baker": "NS", "guide": "NS,V", "ridge": "NS",
    "camp": "NS,V", "cup": "NS", "mind": "NS,V", "memory": "NS",
    "end": "NS,V", "hour": "NS", "wagon": "NS", "rider": "NS",
    "train": "NS,V", "plate": "NS", "sun": "NS", "floor": "NS",
    "door": "NS", "paper": "NS", "bread": "NS", "cheese": "NS",
    "cloth": "NS", "chalk": "NS", "glass": "NS", "wood": "NS",
    "string": "NS,V", "rope": "NS", "canvas": "NS", "puzzle": "NS",
    "map": "NS,V", "machine": "NS", "engine": "NS", "piano": "NS",
    "window": "NS", "walk": "NS,V", "ferry": "NS,V", "pass": "NS,V",
    "report": "NS,V", "crossing": "NS,VING", "line": "NS",
    # nouns, plural
    "dunes": "NPL", "rocks": "NPL", "clouds": "NPL", "nations": "NPL",
    "ministers": "NPL", "envoys": "NPL", "neighbors": "NPL",
    "wells": "NPL", "roads": "NPL", "boats": "NPL", "crews": "NPL",
    "children": "NPL", "coins": "NPL", "beans": "NPL", "onions": "NPL",
    "hills": "NPL", "passes": "NPL", "stars": "NPL", "years": "NPL",
    "hours": "NPL", "riders": "NPL", "travelers": "NPL",
    "soldiers": "NPL", "letters": "NPL", "wagons": "NPL",
    "volunteers": "NPL", "farmers": "NPL", "pieces": "NPL",
    "times": "NPL",
    # proper nouns
    "october": "NP",
    # verbs, base form
    "like": "V,PREP", "want": "V", "see": "V", "make": "V", "take": "V",
    "eat": "V", "bake": "V", "serve": "V", "cross": "V,NS", "sign": "V,NS",
    "break": "V,NS", "share": "V,NS", "watch": "V,NS", "expect": "V",
    "change": "V,NS", "begin": "V", "ride": "V,NS", "march": "V,NS",
    "rest": "V,NS", "hope": "V,NS", "stay": "V", "go": "V", "say": "V",
    "ask": "V", "decide": "V", "trust": "V,NS", "send": "V",
    "guess": "V,NS", "read": "V,VEN", "hold": "V,NS", "reach": "V",
    "arrive": "V", "follow": "V", "wait": "V", "give": "V",
    "promise": "V,NS",
    # verbs, past
    "crossed": "VPAST", "walked": "VPAST", "rode": "VPAST",
    "blew": "VPAST", "stretched": "VPAST", "made": "VPAST,VEN",
    "ate": "VPAST", "baked": "VPAST,VEN", "served": "VPAST,VEN",
    "wanted": "VPAST,VEN", "asked": "VPAST,VEN", "saved": "VPAST,VEN",
    "shared": "VPAST,VEN", "signed": "VPAST,VEN", "spoke": "VPAST",
    "hoped": "VPAST,VEN", "opened": "VPAST,VEN", "held": "VPAST,VEN",
    "brought": "VPAST,VEN", "talked": "VPAST,VEN",
    "promised": "VPAST,VEN", "thrived": "VPAST,VEN", "cut": "V,VPAST,VEN",
    "lay": "VPAST,V", "found": "VPAST,VEN", "wrote": "VPAST",
    "lost": "VPAST,VEN,ADJ", "ground": "VPAST,VEN,NS",
    "cleaned": "VPAST,VEN", "oiled": "VPAST,VEN", "played": "VPAST,VEN",
    "wrapped": "VPAST,VEN", "broke": "VPAST", "fell": "VPAST",
    "followed": "VPAST,VEN", "wondered": "VPAST,VEN",
    "arrived": "VPAST,VEN", "decided": "VPAST,VEN", "knew": "VPAST",
    "argued": "VPAST,VEN", "doubted": "VPAST,VEN", "said": "VPAST,VEN",
    "reached": "VPAST,VEN", "watched": "VPAST,VEN", "kept": "VPAST,VEN",
    "changed": "VPAST,VEN", "turned": "VPAST,VEN", "came": "VPAST",
    "stayed": "VPAST,VEN", "sold": "VPAST,VEN", "seen": "VEN",
    "burned": "VPAST,VEN", "mended": "VPAST,VEN", "counted": "VPAST,VEN",
    "sang": "VPAST", "grew": "VPAST", "rang": "VPAST", "rose": "VPAST,NS",
    "left": "VPAST,VEN,ADJ", "mentioned": "VPAST,VEN",
    "remembered": "VPAST,VEN", "expected": "VPAST,VEN",
    "believed": "VPAST,VEN", "covered": "VPAST,VEN",
    "glowed": "VPAST", "melted": "VPAST,VEN", "nailed": "VPAST,VEN",
    "sat": "VPAST,VEN", "sent": "VPAST,VEN", "warned": "VPAST,VEN",
    "stored": "VPAST,VEN", "ended": "VPAST,VEN", "felt": "VPAST,VEN",
    "dried": "VPAST,VEN", "caught": "VPAST,VEN",
    # verbs, present or -ing
    "changes": "V", "rides": "V", "says": "V", "holds": "V",
    "waiting": "VING", "drying": "VING", "riding": "VING",
    "entering": "VING", "arrives": "V",
    # remaining corpus vocabulary
    "answer": "NS,V", "carried": "VPAST,VEN", "ever": "ADV",
    "find": "V", "halt": "NS,V", "later": "ADV,ADJ", "oven": "NS",
    "ran": "VPAST", "showed": "VPAST", "talk": "V,NS",
    "waited": "VPAST,VEN",
    # punctuation
    ".": "PUNC", ",": "PUNC", ";": "PUNC", ":": "PUNC", "?": "PUNC",
    "!": "PUNC", "'": "PUNC", '"': "PUNC", "(": "PUNC", ")": "PUNC",
    "-": "PUNC",
}

# Proper names are deliberately left out of the dictionary so the demo
# corpus exercises the unknown-word (empty tag set) path.
NAMES = ["Ellis", "Mara", "Dorin", "Webb", "Arden", "Sela"]

POOLS: dict[str, list[str]] = {
    "dry_adj": ["hot", "dry", "vast", "arid", "empty", "silent", "golden"],
    "wet_adj": ["cold", "wet", "gray", "stormy", "foul", "mild", "clear", "bright"],
    "sweet_adj": ["sweet", "rich", "creamy", "warm", "fresh"],
    "time_n": ["noon", "dusk", "dawn", "morning", "evening", "night", "midnight"],
    "desert_n": ["sand", "dust", "heat", "wind"],
    "terrain": ["dunes", "rocks", "canyon", "trail", "oasis"],
    "animal": ["camel", "lizard", "hawk", "fox", "mule"],
    "dessert_n": ["cake", "pie", "pudding", "tart", "custard"],
    "dessert_x": ["sugar", "cream", "honey", "chocolate", "cinnamon"],
    "meal": ["dinner", "supper", "lunch"],
    "piece_n": ["paper", "bread", "cheese", "cloth", "chalk", "glass", "wood",
                 "rope", "canvas"],
    "edible": ["bread", "cheese"],
    "weather_n": ["storm", "rain", "wind", "snow", "fog"],
    "place": ["village", "town", "harbor", "valley", "market", "inn", "mill"],
    "name": NAMES,
}

TEMPLATES: dict[str, list[str]] = {
    "desert": [
        "the caravan crossed the {dry_adj} desert before {time_n} .",
        "riders entering from the desert asked for water .",
        "a {animal} walked across the {dry_adj} desert .",
        "the desert wind blew {desert_n} over the {terrain} .",
        "travelers rode through the desert in the {time_n} heat .",
        "the {dry_adj} desert stretched to the horizon .",
        "water is scarce in the desert during summer .",
        "they made camp at the edge of the desert .",
        "the desert was {dry_adj} and the wells were dry .",
        "sand from the desert covered the road to the {place} .",
        "the soldiers would not desert their post .",
        "no army could cross that desert in summer .",
        "they ate their supper at the edge of the desert .",
        "he carried sugar and flour across the desert .",
    ],
    "dessert": [
        "she baked a chocolate cake for dessert .",
        "we ate {dessert_n} and cream for dessert last night .",
        "the dessert was {sweet_adj} and {sweet_adj} .",
        "he wanted {dessert_n} for dessert after {meal} .",
        "the cook served {dessert_n} with {dessert_x} for dessert .",
        "for dessert there was {dessert_n} with {dessert_x} .",
        "the children asked for dessert before {meal} was over .",
        "grandmother made her famous {dessert_n} for dessert .",
        "dessert that evening was {dessert_n} and sweet coffee .",
        "they shared a small dessert of custard and honey .",
        "the chocolate cake was saved for dessert .",
        "in the summer heat the dessert melted on the plate .",
    ],
    "peace": [
        "the nations signed a peace treaty after the war .",
        "the ministers spoke of peace and justice .",
        "they hoped for a lasting peace along the border .",
        "the peace corps opened a school in the {place} .",
        "the peace corps sent volunteers to the {place} .",
        "after ten years of war the peace finally held .",
        "the truce brought an uneasy peace to the valley .",
        "envoys crossed the border to talk of peace .",
        "the old king wanted peace with his neighbors .",
        "peace of mind was all the farmer asked for .",
        "the treaty promised peace for a generation .",
        "in peace the market thrived and the roads were safe .",
        "the peace felt as thin as glass .",
    ],
    "piece": [
        "he cut a piece of {piece_n} for the child .",
        "a piece of {piece_n} lay on the floor .",
        "she found the missing piece of the puzzle .",
        "a torn piece of the map was nailed to the door .",
        "he wrote the sum on a small piece of paper .",
        "the machine lost a piece and ground to a halt .",
        "every piece of the engine was cleaned and oiled .",
        "she played a quiet piece on the old piano .",
        "a piece of cloth wrapped the loaf .",
        "the window broke and a piece of glass fell out .",
        "give the dog a piece of {edible} and it will follow you .",
        "a small piece of the treaty was read aloud .",
        "she kept a piece of cake for the children .",
    ],
    "weather": [
        "the weather was {wet_adj} and {wet_adj} that {time_n} .",
        "the weather report warned of {weather_n} in the hills .",
        "in winter the weather changes quickly on the coast .",
        "the crews watched the weather from the tower .",
        "foul weather kept the boats in the harbor .",
        "the weather held and the roads stayed open .",
        "after the storm the weather turned {wet_adj} .",
        "farmers read the sky to guess the weather .",
        "the weather that spring was the worst in memory .",
        "cold weather came early and stayed late .",
        "the report did not say if the weather would hold .",
        "they talked for hours about the weather on the road .",
    ],
    "whether": [
        "she wondered whether the train would arrive on time .",
        "he asked whether they could stay another night .",
        "we must decide whether to stay or to go .",
        "nobody knew whether the bridge would hold .",
        "they argued over whether the plan was safe .",
        "the captain doubted whether the crew was ready .",
        "it was unclear whether the letter ever arrived .",
        "we should ask whether anyone rides north this week .",
        "did anyone ask whether the road was open ?",
        "he could not say whether the story was true .",
        "the report did not say whether the crossing would hold .",
        "they talked for hours about whether the road was safe .",
    ],
    "filler": [
        "the baker's oven glowed all through the night .",
        "captain {name} watched the {weather_n} from the tower .",
        "it wasn't the {weather_n} that broke the fence .",
        "let's ride to the {place} before {time_n} .",
        "she couldn't find the letter from {name} .",
        "the first wagon reached the {place} at {time_n} .",
        "two riders came down the trail at {time_n} .",
        "there's a well behind the old mill .",
        "the miller sold flour and salt at the market .",
        "he doesn't trust the new bridge over the river .",
        "what's left of the harvest is stored in the barn .",
        "they're waiting for news from the harbor .",
        "i've never seen the valley so green .",
        "the lamp burned low while she wrote .",
        "oh , the roads were muddy all spring .",
        "the children played by the river until dusk .",
        "he mended the wheel and rode on .",
        "a cold wind came down from the hills .",
        "the innkeeper counted the coins twice .",
        "we'll send word when the boat arrives .",
        "the old map showed a trail through the hills .",
        "her garden grew onions and beans .",
        "the bell rang three times at noon .",
        "smoke rose from the chimney of the inn .",
        "the second letter arrived a week later .",
        "he said adios and rode west .",
        "the well behind the barn ran dry .",
        "snow fell on the high passes in october .",
        "the ferry won't cross in a storm .",
        "she sang an old song about the sea .",
        "who left the gate open ?",
        "how bright the stars were that night !",
        "the dog followed the wagon to the gate .",
        "three boats waited out the storm in the harbor .",
        "{name} wrote twice but no answer came .",
    ],
}

# Frames usable with either word of a pair.  They carry almost no
# distinguishing context, so trained features near-tie on them and the
# minority word becomes genuinely hard to recover in test data.
GENERIC: dict[str, list[str]] = {
    "desert/dessert": [
        "everyone remembered the {W} for years .",
        "nobody mentioned the {W} again .",
        "the {W} was not what they expected .",
        "they argued about the {W} for hours .",
        "she wrote a long letter about the {W} .",
        "the {W} changed nothing in the end .",
    ],
    "peace/piece": [
        "the whole town talked about the {W} .",
        "nobody believed in the {W} anymore .",
        "the {W} did not last through the winter .",
        "he asked about the {W} in his letter .",
        "the {W} was broken before the year ended .",
    ],
}

# Sentence mix: (kind, weight).  Generic frames pick their word by the
# pair prior given below.
MIX = [
    ("desert", 0.068),
    ("dessert", 0.044),
    ("generic:desert/dessert", 0.030),
    ("peace", 0.064),
    ("piece", 0.047),
    ("generic:peace/piece", 0.030),
    ("weather", 0.045),
    ("whether", 0.041),
    ("filler", 0.631),
]

GENERIC_PRIOR = {
    "desert/dessert": ("desert", 0.62),
    "peace/piece": ("peace", 0.58),
}

ATTACHED = {".", ",", ";", ":", "?", "!"}


def fill_slots(template: str, rng: random.Random) -> list[str]:
    words = []
    for token in template.split():
        if token.startswith("{") and token.endswith("}"):
            words.append(rng.choice(POOLS[token[1:-1]]))
        else:
            words.append(token)
    return words


def make_sentence(kind: str, rng: random.Random) -> str:
    if kind.startswith("generic:"):
        pair = kind.split(":", 1)[1]
        first, p_first = GENERIC_PRIOR[pair]
        second = [w for w in pair.split("/") if w != first][0]
        word = first if rng.random() < p_first else second
        template = rng.choice(GENERIC[pair]).replace("{W}", word)
    else:
        template = rng.choice(TEMPLATES[kind])
    words = fill_slots(template, rng)
    words[0] = words[0][0].upper() + words[0][1:]
    text = ""
    for word in words:
        if word in ATTACHED or not text:
            text += word
        else:
            text += " " + word
    return text


def make_corpus(rng: random.Random, n_sentences: int) -> str:
    kinds = [kind for kind, _ in MIX]
    weights = [weight for _, weight in MIX]
    sentences = [
        make_sentence(rng.choices(kinds, weights)[0], rng)
        for _ in range(n_sentences)
    ]
    paragraphs = [
        textwrap.fill(" ".join(chunk), width=WRAP_WIDTH)
        for chunk in (
            sentences[i : i + SENTENCES_PER_PARAGRAPH]
            for i in range(0, len(sentences), SENTENCES_PER_PARAGRAPH)
        )
    ]
    return "\n\n".join(paragraphs) + "\n"


def render_tag_dictionary() -> str:
    lines = ["TAGS: " + ",".join(INVENTORY)]
    for word in sorted(LEXICON):
        tags = LEXICON[word].split(",")
        assert all(t in INVENTORY for t in tags), (word, tags)
        lines.append(f"{word}\t{','.join(tags)}")
    return "\n".join(lines) + "\n"


def check_coverage(corpus: str) -> None:
    known_names = {n.lower() for n in NAMES}
    missing = set()
    for raw in corpus.split():
        word = raw.strip(".,;:?!\"'()-").lower()
        if not word:
            continue
        if word not in LEXICON and word not in known_names:
            missing.add(word)
    if missing:
        raise SystemExit(f"words without dictionary entries: {sorted(missing)}")


def main() -> None:
    rng = random.Random(SEED)
    train = make_corpus(rng, TRAIN_SENTENCES)
    test = make_corpus(rng, TEST_SENTENCES)
    check_coverage(train)
    check_coverage(test)

    data_dir = ROOT / "data"
    data_dir.mkdir(exist_ok=True)
    (data_dir / "mini_train.txt").write_text(train, encoding="utf-8")
    (data_dir / "mini_test.txt").write_text(test, encoding="utf-8")
    (data_dir / "confusion_sets.txt").write_text(
        "# demo confusion sets for the bundled corpus\n"
        "desert,dessert\n"
        "peace,piece\n"
        "weather,whether\n",
        encoding="utf-8",
    )
    tags_path = ROOT / "src" / "cssc" / "data" / "tags.txt"
    tags_path.parent.mkdir(parents=True, exist_ok=True)
    tags_path.write_text(render_tag_dictionary(), encoding="utf-8")

    n_train = len(train.split())
    n_test = len(test.split())
    print(f"train: {TRAIN_SENTENCES} sentences, {n_train} tokens")
    print(f"test:  {TEST_SENTENCES} sentences, {n_test} tokens")


if __name__ == "__main__":
    main()
