"""Word lists backing the tagger and lemmatizer.

Open-class entries are base forms; inflected forms are generated at import
time. Irregular forms come from explicit tables.
"""

from __future__ import annotations

import re

CLOSED_CLASS = {
    "DT": "a an the this that these those each every no another either neither some any all both half",
    "PDT": "such",
    "IN": (
        "about above across after against along among around at before behind below beneath beside besides "
        "between beyond by despite during except for from in inside into near of off on onto out outside over "
        "per since than through throughout till toward towards under underneath unlike until upon via with "
        "within without whether because although though while if unless whereas as like"
    ),
    "CC": "and or but nor plus yet",
    "TO": "to",
    "MD": "can could may might must shall should will would ca wo",
    "PRP": "i me you he him she her it we us they them myself yourself himself herself itself ourselves themselves one's",
    "PRP$": "my your his her its our their",
    "WDT": "which whatever whichever",
    "WP": "what who whom whoever",
    "WP$": "whose",
    "WRB": "how when where why whenever wherever",
    "EX": "there",
    "RB": (
        "not also very too only just still already almost again always never often sometimes usually then "
        "now later soon once twice ago altogether together each respectively exactly approximately nearly "
        "about instead else even ever finally first initially originally currently totally entirely rather "
        "quite so away back apart up down out yesterday today tomorrow tonight here everywhere far fast "
        "however thus therefore hence otherwise actually really simply directly evenly equally"
    ),
    "RP": "",
    "UH": "yes oh please",
}

NUMBER_WORDS = (
    "zero one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen sixteen "
    "seventeen eighteen nineteen twenty thirty forty fifty sixty seventy eighty ninety hundred thousand "
    "million billion dozen"
).split()

ORDINALS = (
    "first second third fourth fifth sixth seventh eighth ninth tenth eleventh twelfth last next"
).split()

# base, past, past participle
IRREGULAR_VERBS = """
arise arose arisen
be was been
bear bore born
beat beat beaten
become became become
begin began begun
bend bent bent
bet bet bet
bind bound bound
bite bit bitten
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
build built built
burn burnt burnt
burst burst burst
buy bought bought
catch caught caught
choose chose chosen
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
dig dug dug
do did done
draw drew drawn
dream dreamt dreamt
drink drank drunk
drive drove driven
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
fit fit fit
flee fled fled
fly flew flown
forbid forbade forbidden
forget forgot forgotten
forgive forgave forgiven
freeze froze frozen
get got gotten
give gave given
go went gone
grind ground ground
grow grew grown
hang hung hung
have had had
hear heard heard
hide hid hidden
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt knelt
know knew known
lay laid laid
lead led led
lean leant leant
leap leapt leapt
learn learnt learnt
leave left left
lend lent lent
let let let
lie lay lain
light lit lit
lose lost lost
make made made
mean meant meant
meet met met
overtake overtook overtaken
pay paid paid
prove proved proven
put put put
quit quit quit
read read read
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
sew sewed sewn
shake shook shaken
shine shone shone
shoot shot shot
show showed shown
shrink shrank shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
sleep slept slept
slide slid slid
sow sowed sown
speak spoke spoken
speed sped sped
spend spent spent
spill spilt spilt
spin spun spun
split split split
spread spread spread
spring sprang sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
strike struck struck
swear swore sworn
sweep swept swept
swim swam swum
swing swung swung
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
understand understood understood
undertake undertook undertaken
wake woke woken
wear wore worn
weave wove woven
weep wept wept
win won won
wind wound wound
withdraw withdrew withdrawn
write wrote written
"""

IRREGULAR_VERB_FORMS = {
    # form: base
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be", "been": "be", "being": "be",
    "has": "have", "having": "have", "does": "do", "doing": "do", "goes": "go",
    "'s": "be", "'re": "be", "'m": "be", "'ve": "have", "'ll": "will", "'d": "would",
    "n't": "not", "ca": "can", "wo": "will",
}

REGULAR_VERBS = """
accept add admire afford agree allow answer appear arrange arrive ask attend bake balance bank bat bike boil
book borrow bounce bowl box brush buckle bump burn calculate call camp carry cash celebrate change charge chase
check cheer chop circle clap clean clear climb close collect color colour combine compare complete contain cook
copy correct count cover crack crash cross crush cry cycle dance decide decorate deliver deposit design destroy
divide donate double drop dry dust earn empty end enjoy enter equal escape estimate exchange exercise expect
explain fail fill finish fix fold follow gain gather glue grab guess hammer hand handle happen harvest hate heat
help hike hire hop hope hug hunt hurry include increase invite jog join joke jump kick kill kiss knit knock label
land last laugh launch learn like list listen live load lock look love mail manage march mark match measure melt
mix move multiply need note notice number obtain offer open order own pack paddle paint park pass paste pause
pedal peel pick place plan plant play pour practice practise prefer prepare press print produce promise pull
pump punch purchase push race rain raise rake reach receive record recycle reduce relax remain remember remove
rent repair repeat replace reply require rest return roll rush sail save score scrub search serve share shop
sign ski skip slice smile snow solve sort spell spill splash stack start stay step stop store stuff subtract
suppose surround survive talk tape taste test thank tick tie tip total touch tour trace trade train travel treat
trim try turn type use vacuum visit vote wait walk want warm wash watch water weigh wish wonder work worry wrap
yell zip review fish fry carve pitch plow ship sprinkle restock unload reuse
"""

REGULAR_NOUNS = """
acre adult afternoon age airplane album amount animal answer ant apartment apple area arm art aunt avenue
baby backpack bag bagel bakery ball balloon banana band bank barn base basket basketball bat bath battery beach
bead bean bear bed bee bell belt bench berry bicycle bike bill bird birthday biscuit block board boat body bone
book bookcase bookshelf bottle bowl box boy bracelet branch bread breakfast brick bridge brother brownie bucket
building bunch bundle bus butter butterfly button cake calculator calendar calorie camera can candle candy cap car
card carrot carton cat cent chair chalk chapter cheese cherry chicken child chip chocolate circle city class
classroom clock cloth coat coin college color cone container cookie corn cost cottage country cousin cow crayon
cube cup cupcake customer day dad daughter deck degree desk dessert diameter dime dinner dish distance dog doll
dollar donut door dot dozen dress drink duck egg elephant envelope eraser evening exam factory family farm farmer
father fee fence field figure fish flag floor flour flower folder food foot football fork fraction friend frog
fruit game garage garden gallon gift giraffe girl glass glove goal goat gold grade gram grandfather grandmother
grape grass group guest guitar gum hair half hallway hamburger hand hat head height hen hole home homework hook
horse hospital hour house hundred ice inch insect island jacket jar job juice kid kilogram kilometer kitchen kite
kitten ladder lake lamp lap leaf length lesson letter liter litre loaf lollipop lot lunch machine magazine mango
marble market meal meat member meter metre mile milk minute model mom money monkey month morning mother movie
muffin mug nail necklace neighbor nest newspaper nickel night note notebook number nut office orange order ounce
owner package page pail pair pan paper parent park party pasta pastry path peach peanut pear pen pencil penny
people pepper perimeter person pet piano picture pie piece pig pile pillow pizza place plane plant plate player
plum pocket point pole pond pool portion post pot potato pound present price prize problem pudding pumpkin
puppy puzzle quantity quarter question rabbit race radius rate ratio recipe rectangle remainder rest ribbon rice
ride ring river road robot rock roll room rope rose row rug ruler sale salad sandwich sauce school score sea seat
second seed set shape sheep sheet shelf shell shirt shoe shop side sister size skirt slice snack sock soda sofa
son song soup speed spoon sport square stamp star station sticker stone store story strawberry street student
sugar sum summer sun supply sweater table tank tea teacher team teaspoon ten tent term test thing ticket tiger
time tire toy track tractor train tree triangle trip truck turtle uncle unit van vase vegetable village volume
wagon wall watch water watermelon week weekend weight wheel width window winter wood word worker yard year
zoo pupil bakery cafeteria cookie brownie goalie movie pie tie calorie pastry loaf potato tomato hero echo
digit decimal point total difference product quotient multiple divisor factor average mean median percent
interest profit loss discount salary wage tax gain share investment principal pole kilometre km hr
"""

IRREGULAR_NOUNS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot", "teeth": "tooth", "geese": "goose",
    "mice": "mouse", "oxen": "ox", "people": "people", "loaves": "loaf", "leaves": "leaf", "knives": "knife",
    "wives": "wife", "lives": "life", "halves": "half", "shelves": "shelf", "wolves": "wolf", "calves": "calf",
    "thieves": "thief", "scarves": "scarf", "elves": "elf", "selves": "self", "bookshelves": "bookshelf",
    "dice": "die", "data": "datum", "criteria": "criterion", "cacti": "cactus", "fungi": "fungus",
    "sheep": "sheep", "deer": "deer", "fish": "fish", "series": "series", "species": "species",
    "police": "police", "grandchildren": "grandchild", "firemen": "fireman", "policemen": "policeman",
    "potatoes": "potato", "tomatoes": "tomato", "heroes": "hero", "echoes": "echo", "mangoes": "mango",
    "radii": "radius", "indices": "index", "matrices": "matrix",
}

ADJECTIVES = """
able angry bad big black blue bored brown busy cheap clean clear close cold common cool correct dark deep
different difficult dirty due early easy empty entire equal even excited expensive extra fair false famous far
fast fat favorite favourite few fine free fresh friendly full funny further glad golden good great green half
happy hard healthy heavy high hot hungry huge important large late lazy left light little local long loud low
lucky mad main many maximum minimum much narrow new nice odd old orange other own pink plain poor possible
pretty purple quick quiet rainy ready real red regular remaining rich right round sad same several short shy
sick silver similar simple single slow small smart soft sorry special spare square strong sunny sure sweet
tall thick thin tiny total true ugly unable unknown upset usual warm weekly wet white whole wide wild wooden
wrong yellow young daily monthly yearly certain original initial final whole least more most less fewer
"""

IRREGULAR_ADJECTIVES = {
    "better": "good", "best": "good", "worse": "bad", "worst": "bad", "more": "much", "most": "much",
    "less": "little", "least": "little", "further": "far", "farther": "far", "furthest": "far",
    "farthest": "far", "elder": "old", "eldest": "old",
}

PROPER_TITLES = {"mr.", "mrs.", "ms.", "dr.", "mr", "mrs", "ms", "dr", "st.", "miss", "prof."}

MONTHS_AND_DAYS = (
    "January February March April May June July August September October November December "
    "Monday Tuesday Wednesday Thursday Friday Saturday Sunday"
).split()


def _double_final(base: str) -> bool:
    # stop -> stopped; visit -> visited (stress is unknowable here, keep it to short CVC stems)
    return (
        len(base) <= 4
        and re.search(r"[^aeiou][aeiou][bdgklmnprt]$", base) is not None
    )


def third_person(base: str) -> str:
    if re.search(r"(s|x|z|ch|sh|o)$", base):
        return base + "es"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ies"
    return base + "s"


def past_tense(base: str) -> str:
    if base.endswith("e"):
        return base + "d"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ied"
    if _double_final(base):
        return base + base[-1] + "ed"
    return base + "ed"


def present_participle(base: str) -> str:
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        return base[:-1] + "ing"
    if _double_final(base):
        return base + base[-1] + "ing"
    return base + "ing"


def plural(noun: str) -> str:
    if re.search(r"(s|x|z|ch|sh)$", noun):
        return noun + "es"
    if re.search(r"[^aeiou]y$", noun):
        return noun[:-1] + "ies"
    if noun.endswith("f") and noun not in {"roof", "chef", "belief", "proof", "cliff"}:
        return noun[:-1] + "ves"
    return noun + "s"


def _build():
    verbs: dict[str, dict[str, str]] = {}
    # form -> {tag: base}
    def add(form, tag, base):
        verbs.setdefault(form, {})[tag] = base

    for line in IRREGULAR_VERBS.strip().splitlines():
        base, past, part = line.split()
        add(base, "VB", base)
        add(third_person(base), "VBZ", base)
        add(present_participle(base), "VBG", base)
        add(past, "VBD", base)
        add(part, "VBN", base)
    for base in REGULAR_VERBS.split():
        add(base, "VB", base)
        add(third_person(base), "VBZ", base)
        add(present_participle(base), "VBG", base)
        add(past_tense(base), "VBD", base)
        add(past_tense(base), "VBN", base)
    verbs.update({
        "am": {"VBP": "be"}, "is": {"VBZ": "be"}, "are": {"VBP": "be"}, "was": {"VBD": "be"},
        "were": {"VBD": "be"}, "been": {"VBN": "be"}, "being": {"VBG": "be"}, "be": {"VB": "be"},
        "has": {"VBZ": "have"}, "have": {"VB": "have", "VBP": "have"}, "had": {"VBD": "have", "VBN": "have"},
        "does": {"VBZ": "do"}, "did": {"VBD": "do"}, "done": {"VBN": "do"}, "goes": {"VBZ": "go"},
    })
    nouns: dict[str, str] = {}
    # form -> base
    for noun in REGULAR_NOUNS.split():
        nouns[noun] = noun
    noun_plurals = {plural(n): n for n in REGULAR_NOUNS.split()}
    noun_plurals.update(IRREGULAR_NOUNS)
    return verbs, nouns, noun_plurals


VERB_FORMS, NOUN_BASES, NOUN_PLURALS = _build()
VERB_BASES = {b for forms in VERB_FORMS.values() for b in forms.values()}
ADJECTIVE_SET = set(ADJECTIVES.split())
KNOWN_BASES = VERB_BASES | set(NOUN_BASES) | ADJECTIVE_SET
