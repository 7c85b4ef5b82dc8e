"""Synthetic corpora for the acceptance suite."""

import random

from mwpdiv.corpus import ProblemRecord
from mwpdiv.normalization import NormalizedProblem

PTB_TAGS = ("NN NNS NNP VB VBD VBZ VBP VBG VBN JJ JJR JJS RB IN DT CD CC PRP PRP$ TO MD WDT WP WRB "
            "EX RP POS . , : -LRB- -RRB- $ PDT UH FW").split()


def zipf_weights(n, s=1.1):
    return [1.0 / (k + 1) ** s for k in range(n)]


def zipf_group(rng, size, vocab=2000, min_len=3, max_len=40):
    """Random normalized problems with Zipf-distributed lemmas and tags."""
    lemmas = [f"w{k}" for k in range(vocab)]
    lw = zipf_weights(vocab)
    tw = zipf_weights(len(PTB_TAGS), 0.8)
    out = []
    for k in range(size):
        n = rng.randint(min_len, max_len)
        norm = rng.choices(lemmas, lw, k=n)
        pos = rng.choices(PTB_TAGS, tw, k=rng.randint(min_len, max_len))
        if rng.random() < 0.05 and out:
            # occasional exact or near duplicate
            src = rng.choice(out)
            norm = list(src.norm_tokens) + ([] if rng.random() < 0.5 else [rng.choice(lemmas)])
            pos = list(src.pos_tokens)
        out.append(NormalizedProblem(f"p{k:04d}", tuple(norm), tuple(pos)))
    return out


FRAMES = [
    "a shopkeeper sells {} articles at a profit of {} % . if the cost of each article is rs . {}",
    "a train {} m long passes a platform {} m long in {} seconds .",
    "the average of {} numbers is {} . if one number {} is removed",
    "a sum of rs . {} amounts to rs . {} in {} years at simple interest .",
    "a can complete a work in {} days and b in {} days . they work together for {} days .",
    "the ratio of boys to girls in a class is {} : {} . if there are {} students",
    "a rectangle has length {} cm and breadth {} cm . a square has side {} cm .",
    "a man rows {} km upstream and {} km downstream in {} hours .",
    "a mixture of {} litres contains milk and water in the ratio {} : {} .",
    "the price of sugar rises by {} % from rs . {} per kg , and a family buys {} kg .",
]
QUESTIONS = [
    "what is the answer ?", "find the required value .", "what is the result ?",
    "how much is it ?", "then the value is :",
]


def template_corpus(rng, n_templates=50, fills=100):
    """``n_templates`` sentence templates, each filled with ``fills`` number draws."""
    templates = [f"{FRAMES[t % len(FRAMES)]} {QUESTIONS[t // len(FRAMES) % len(QUESTIONS)]}"
                 for t in range(n_templates)]
    records = []
    for t, tpl in enumerate(templates):
        for f in range(fills):
            nums = [str(rng.randint(2, 999)) if rng.random() < 0.8 else f"{rng.randint(1, 99)}.{rng.randint(1, 9)}"
                    for _ in range(tpl.count("{}"))]
            records.append(ProblemRecord(id=f"t{t:02d}-{f:03d}", body=tpl.format(*nums), answer="0"))
    return records


NAMES = ("Mary John Tom Lisa Sam Anna Paul Emma Jack Lucy Mike Sara Ben Nina Omar Rosa Ivan Maya Leo "
         "Zoe Carl Dana Eric Fay Gus Hana Ian Jade Kyle Lena").split()
ITEMS = ("apple orange pencil book marble sticker cookie cupcake toy car shell stamp card ribbon balloon "
         "crayon flower bead button coin egg muffin sandwich shirt sock hat ticket brick plank tile bottle "
         "jar bag box basket crate bucket shelf seed tree plant fish bird rabbit puppy kitten chair table "
         "lamp candle notebook eraser ruler marker folder poster magnet puzzle robot kite drum").split()
PLACES = ("store market park school library farm garden zoo beach museum bakery class kitchen yard "
          "field pond river lake forest camp office factory warehouse shop mall station").split()
VERBS = ("buys sells finds loses gives collects bakes picks makes paints plants catches packs orders "
         "receives borrows keeps shares trades counts sorts stacks carries fixes wraps").split()
ADJS = ("red blue green small large old new shiny wooden plastic fresh ripe heavy light long short "
        "round square striped golden silver tiny huge empty full").split()
TIME = ("on Monday", "on Tuesday", "in the morning", "after school", "last week", "yesterday",
        "during lunch", "on the weekend", "in the evening", "today")
QWORDS = ("How many {}s does {} have now ?", "How many {}s are left ?", "What is the total number of {}s ?",
          "How many more {}s does {} need ?", "How many {}s did {} have at first ?",
          "What is the cost of each {} ?", "How many {}s are in each group ?")


def _plural(w):
    return w + ("es" if w.endswith(("s", "sh", "ch", "x")) else "s")


def mwp_record(rng, pid):
    """A grammar-generated word problem of two to five sentences."""
    name, other = rng.sample(NAMES, 2)
    item, item2 = rng.sample(ITEMS, 2)
    parts = [f"{name} has {rng.randint(2, 500)} {rng.choice(ADJS)} {_plural(item)} at the {rng.choice(PLACES)} ."]
    for _ in range(rng.randint(1, 4)):
        kind = rng.randrange(5)
        n = rng.randint(1, 200)
        if kind == 0:
            parts.append(f"{rng.choice([name, other])} {rng.choice(VERBS)} {n} {_plural(item)} {rng.choice(TIME)} .")
        elif kind == 1:
            parts.append(f"Each {item2} costs ${n} and {other} {rng.choice(VERBS)} {rng.randint(2, 30)} of them .")
        elif kind == 2:
            parts.append(f"There are {n} {rng.choice(ADJS)} {_plural(item2)} in every {rng.choice(ITEMS)} .")
        elif kind == 3:
            parts.append(f"{other} {rng.choice(VERBS)} {n} times as many {_plural(item)} as {name} .")
        else:
            parts.append(f"The {rng.choice(PLACES)} had {n} {_plural(item2)} , but {rng.randint(1, 50)} "
                         f"were {rng.choice(['sold', 'lost', 'broken', 'given away', 'eaten'])} .")
    question = rng.choice(QWORDS).format(item, rng.choice([name, other]))
    body = " ".join(parts)
    return ProblemRecord(id=pid, body=body, question=question, answer=str(rng.randint(1, 999)))


def mwp_corpus(rng, n):
    return [mwp_record(rng, f"s{k:05d}") for k in range(n)]
