"""Bundled stopword lists for English and French.

Fixed lists: analyses must be reproducible, so these are frozen here
rather than pulled from an external resource at runtime.
"""

EN_STOPWORDS = frozenset("""
the and that this these those with from into onto for not but nor all any
some such was were are is be been being am have has had having does did
doing done will would shall should may might can could must its his her
hers him she they them their theirs our ours your yours mine out when who
whom whose what which where why how then than too very there here about
above below between both each few more most other own same so only just
also again further once during before after over under off down upon
because while until unless against among through within without toward
towards you yourself ourselves themselves himself herself itself myself
one two three first second another many much now ever never always often
sometimes yet still even though although however therefore thus hence
indeed rather instead per via amid amidst besides beyond despite except
like unlike near onto since whether either neither anybody anyone anything
everybody everyone everything nobody none nothing somebody someone
something whatever whenever wherever whichever whoever whomever was wasnt
isnt arent dont doesnt didnt wont wouldnt couldnt shouldnt cant cannot
thou thee thy thine hath hast doth dost shalt wilt unto
""".split())

FR_STOPWORDS = frozenset("""
les des une aux est sont était étaient sera seront être été avoir avait
avaient ont eu par pour dans sur sous avec sans chez vers depuis pendant
avant après entre contre comme mais donc car ni que qui quoi dont où quand
comment pourquoi parce alors ainsi aussi bien très peu plus moins trop
assez tout tous toute toutes quel quelle quels quelles leur leurs notre
nos votre vos mon mes ton tes son ses cette ces cet celui celle ceux
celles ceci cela être suis es sommes êtes fut furent soit soient sois
serait seraient était étions étiez fais fait faites font faisait ferai
fera feront peut peuvent pouvait pourra pourront doit doivent devait
devra devront veut veulent voulait voudra voudront ici même mêmes autre
autres chaque plusieurs quelque quelques certains certaines aucun aucune
nul nulle rien personne jamais toujours souvent parfois encore déjà
ensuite enfin puis lors lorsque tandis cependant pourtant néanmoins
toutefois dès afin malgré outre parmi selon envers hormis sauf voici
voilà etc
""".split())

STOPWORDS = {"en": EN_STOPWORDS, "fr": FR_STOPWORDS}
