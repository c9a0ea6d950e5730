#!/usr/bin/env python3
"""Writes data/fixture_corpus.json: a deterministic labeled distractor corpus.

Each answer has a pool of harder (college) and easier (high school) clues plus
one giveaway. Questions are sampled from those pools with a fixed seed. A
separate hand-written geography set carries every country mention, so the
country counts are exact and checked below.
"""

import json
import random
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

BANK = [
    ("Aaron Copland", "Fine Arts", "Music", [
        "This composer wrote the Piano Variations of 1930 and the Dance Symphony drawn from his ballet Grohg.",
        "This composer studied with Nadia Boulanger in Paris and wrote a Symphony for Organ and Orchestra for her.",
        "The orchestral work Connotations by this composer opened Philharmonic Hall at Lincoln Center.",
        "This composer's Third Symphony quotes his own Fanfare for the Common Man in its final movement.",
    ], [
        "This composer wrote the ballet Appalachian Spring for Martha Graham, which quotes the Shaker hymn Simple Gifts.",
        "This composer wrote the cowboy ballets Rodeo and Billy the Kid.",
        "This composer wrote Lincoln Portrait and the film score for Our Town.",
    ], "For ten points, name this American composer of Appalachian Spring and Fanfare for the Common Man."),

    ("Tacitus", "History", "Ancient", [
        "This historian's Dialogue on Orators discusses the decline of eloquence under the principate.",
        "This author wrote a biography of his father-in-law Agricola, the governor who campaigned in Caledonia.",
        "This historian described the Germanic tribes and their customs in his ethnography Germania.",
        "This historian wrote that the Romans make a desert and call it peace, in a speech given to Calgacus.",
    ], [
        "This Roman historian wrote the Annals and the Histories about the emperors after Augustus.",
        "This historian described the Great Fire of Rome under Nero and the persecution of Christians that followed.",
        "This senator and historian mentioned Christus and Pontius Pilate in his account of Nero's reign.",
    ], "For ten points, name this Roman historian who wrote the Annals and the Histories."),

    ("Candide", "Literature", "European", [
        "In this work, the old woman tells how she lost one buttock during a siege.",
        "In this work, the title character visits the hidden golden land of El Dorado with his valet Cacambo.",
        "In this work, the Manichaean scholar Martin accompanies the hero on his voyage back to Europe.",
        "In this work, the Anabaptist Jacques drowns in Lisbon harbor before the earthquake strikes the city.",
    ], [
        "This novella features the tutor Pangloss, who insists that all is for the best in the best of all possible worlds.",
        "This satire by Voltaire follows a young man expelled from the castle of Baron Thunder-ten-Tronckh for kissing Cunegonde.",
        "This work ends with the line that we must cultivate our garden, and inspired an operetta by Leonard Bernstein.",
    ], "For ten points, name this satirical novella by Voltaire about an optimistic young man and his tutor Pangloss."),

    ("torque", "Science", "Physics", [
        "Varignon's theorem states that this quantity about a point equals the sum of the moments of the component forces.",
        "This quantity equals the cross product of the magnetic dipole moment and the magnetic field for a current loop.",
        "This pseudovector quantity is the time derivative of angular momentum.",
        "Integrating this quantity over angular displacement gives the rotational work done on a body.",
    ], [
        "This quantity is measured in newton meters and is calculated as force times lever arm.",
        "This quantity, denoted tau, equals the moment of inertia times the angular acceleration.",
        "A wrench applies this quantity to turn a bolt, and this quantity is greater with a longer handle.",
    ], "For ten points, name this rotational equivalent of force."),

    ("Antonio López de Santa Anna", "History", "Americas", [
        "This leader's brother-in-law Martin Perfecto de Cos surrendered at the Siege of Bexar.",
        "This leader defeated the Barradas Expedition at Tampico and was hailed as the hero of Tampico.",
        "This general supported the Plan of Casa Mata that brought down Agustin de Iturbide.",
        "This leader replaced the federal constitution with the centralist Siete Leyes.",
    ], [
        "This Mexican general lost his leg during the Pastry War and later gave it a full military burial.",
        "This general captured the Alamo but was defeated by Sam Houston at San Jacinto during the Texas Revolution.",
        "This Mexican president and general served as president eleven times and lost territory in the Mexican-American War.",
    ], "For ten points, name this Mexican general and president who fought in the Texas Revolution."),

    ("aldehydes", "Science", "Chemistry", [
        "Alexander Borodin studied the aldol condensation of these compounds when he was not composing music.",
        "Justus von Liebig coined the name of these compounds from a shortened Latin phrase for dehydrogenated alcohol.",
        "The Cannizzaro reaction disproportionates these compounds that lack an alpha hydrogen.",
        "Fehling's solution and Tollens' reagent give a positive test for these compounds but not for ketones.",
    ], [
        "These organic compounds contain the formyl group, a carbonyl bonded to a hydrogen atom.",
        "These compounds form from the partial oxidation of primary alcohols such as methanol and ethanol.",
        "Formaldehyde and acetaldehyde are simple examples of these compounds, which end in the suffix -al.",
    ], "For ten points, name these organic compounds containing the formyl group CHO."),

    ("Burkina Faso", "History", "Africa", [
        "The Mossi Kingdoms ruled this land from their capital before French colonization.",
        "This country fought the Agacher Strip War over a border dispute with its northern neighbor.",
        "A popular uprising in 2014 forced this country's president Blaise Compaore to resign.",
        "This country's leader Thomas Sankara seized power from Jean-Baptiste Ouedraogo and planted millions of trees.",
    ], [
        "This landlocked West African country was formerly known as Upper Volta.",
        "Thomas Sankara renamed this West African country, giving it a name meaning land of upright people.",
        "This West African country hosts the FESPACO film festival in its capital.",
    ], "For ten points, name this landlocked West African country once called Upper Volta."),

    ("Haruki Murakami", "Literature", "World", [
        "In one novel by this author, Aomame recognizes the Sinfonietta by Janacek while riding in a taxi.",
        "In one novel by this author, Tengo is hired to rewrite the story Air Chrysalis.",
        "In one novel by this author, Toru Okada listens to a Rossini overture while making spaghetti and later sits at the bottom of a well.",
        "A war veteran recalls the Manchurian campaign in this author's novel about a missing cat.",
    ], [
        "This Japanese author wrote The Wind-Up Bird Chronicle and Norwegian Wood.",
        "This Japanese novelist wrote 1Q84 and Kafka on the Shore.",
        "This Japanese author wrote about running in What I Talk About When I Talk About Running.",
    ], "For ten points, name this Japanese author of Norwegian Wood and 1Q84."),

    ("rings of Saturn", "Science", "Astronomy", [
        "The moons Janus and Epimetheus share an orbit near a faint part of these structures, and another arc is associated with Methone.",
        "Edouard Roche proposed that these structures formed from a moon torn apart inside his limit.",
        "Pierre-Simon Laplace suggested that these structures are made of many separate ringlets with gaps.",
        "The Colombo Gap and the Maxwell Gap lie in the C section of these structures.",
    ], [
        "The largest gap in these structures is the Cassini Division.",
        "These structures are made mostly of water ice and orbit the sixth planet from the Sun.",
        "Galileo first saw these structures in 1610 but mistook them for ears or moons.",
    ], "For ten points, name these icy structures that orbit the sixth planet from the Sun."),

    ("Istanbul", "Geography", "Cities", [
        "Sultan Abdul Hamid the Second moved his residence to Yildiz Palace in this city fearing an attack from the sea.",
        "The architect Sedefkar Mehmed Agha designed a mosque in this city based on the earlier Hagia Sophia.",
        "The Nuruosmaniye Mosque and the Fatih Mosque stand on the seven hills of this city.",
        "The Topkapi Palace in this city overlooks the Golden Horn and the Bosphorus.",
    ], [
        "This city is home to the Blue Mosque and the Hagia Sophia.",
        "This city straddles the Bosphorus between Europe and Asia.",
        "This city was once called Constantinople and Byzantium.",
    ], "For ten points, name this largest city on the Bosphorus, once the Ottoman capital."),

    ("Moby-Dick", "Literature", "American", [
        "In this novel, a doubloon is nailed to the mast as a reward for the first sailor to sight the quarry.",
        "In this novel, Queequeg's coffin is turned into a life buoy after he recovers from his fever.",
        "This novel contains the cetology chapters that classify whales like books by folio and octavo size.",
        "In this novel, the Parsee harpooner Fedallah prophesies the death of the captain.",
    ], [
        "This novel begins with the line Call me Ishmael.",
        "In this novel, Captain Ahab hunts a great white whale aboard the Pequod.",
        "This novel by Herman Melville follows the whaling ship Pequod out of Nantucket.",
    ], "For ten points, name this Herman Melville novel about the hunt for a white whale."),

    ("Don Quixote", "Literature", "European", [
        "In this novel, the curate and the barber burn most of the hero's library of chivalric romances.",
        "The second part of this novel responds to a spurious sequel written by Avellaneda.",
        "In this novel, the squire governs the island of Barataria as a practical joke by a duke and duchess.",
        "This novel includes the interpolated tale of The Man Who Was Recklessly Curious.",
    ], [
        "In this novel, the title character attacks windmills that he believes are giants.",
        "This novel by Miguel de Cervantes follows a knight and his squire Sancho Panza.",
        "In this novel, the hero rides the horse Rocinante and loves the peasant woman Dulcinea.",
    ], "For ten points, name this Miguel de Cervantes novel about a deluded knight from La Mancha."),

    ("Jane Austen", "Literature", "British", [
        "This author's unfinished novel Sanditon satirizes a seaside resort and its hypochondriac residents.",
        "This author's novel Mansfield Park follows Fanny Price, who refuses the proposal of Henry Crawford.",
        "This author wrote the epistolary novella Lady Susan about a scheming widow.",
        "This author parodied Gothic fiction in Northanger Abbey through Catherine Morland.",
    ], [
        "This author wrote Pride and Prejudice, which features Elizabeth Bennet and Mr. Darcy.",
        "This author wrote Sense and Sensibility about the Dashwood sisters.",
        "This English novelist wrote Emma about a meddling matchmaker in Highbury.",
    ], "For ten points, name this English author of Pride and Prejudice."),

    ("The Great Gatsby", "Literature", "American", [
        "In this novel, Owl Eyes is astonished that the books in a library are real.",
        "In this novel, the eyes of Doctor T. J. Eckleburg watch over the valley of ashes.",
        "In this novel, the golfer Miss Baker is accused of moving her ball in a tournament.",
        "In this novel, Meyer Wolfsheim is said to have fixed the World Series of 1919.",
    ], [
        "In this novel, Nick Carraway narrates the story of his neighbor in West Egg.",
        "This novel by F. Scott Fitzgerald ends with boats beating against the current, borne back ceaselessly into the past.",
        "In this novel, the title character stares at a green light at the end of Daisy Buchanan's dock.",
    ], "For ten points, name this F. Scott Fitzgerald novel about a mysterious millionaire."),

    ("Gabriel García Márquez", "Literature", "World", [
        "This author's novella Chronicle of a Death Foretold describes the murder of Santiago Nasar.",
        "This author wrote The Autumn of the Patriarch about an ageless dictator.",
        "This author's story A Very Old Man with Enormous Wings describes a fallen angel kept in a chicken coop.",
        "This author wrote Love in the Time of Cholera about Florentino Ariza and Fermina Daza.",
    ], [
        "This author wrote One Hundred Years of Solitude about the Buendia family in Macondo.",
        "This Nobel laureate is associated with magical realism and was nicknamed Gabo.",
        "This Latin American author wrote One Hundred Years of Solitude and Love in the Time of Cholera.",
    ], "For ten points, name this Colombian author of One Hundred Years of Solitude."),

    ("Beowulf", "Literature", "British", [
        "This poem includes a digression about the Finnsburh fight sung by a scop in Heorot.",
        "The only manuscript of this poem survived a fire in the Cotton library.",
        "In this poem, the hero's retainer Wiglaf is the only one to help him against a dragon.",
        "In this poem, the hero uses the sword Hrunting, lent by Unferth, which fails him underwater.",
    ], [
        "In this Old English epic, the hero tears the arm off the monster Grendel.",
        "In this poem, the hero kills Grendel's mother in her underwater lair.",
        "This epic poem is set in the mead hall Heorot built by King Hrothgar.",
    ], "For ten points, name this Old English epic poem about a Geatish hero who fights Grendel."),

    ("Napoleon Bonaparte", "History", "European", [
        "This leader's Continental System tried to block British trade with the mainland.",
        "This leader won the Battle of Austerlitz against two emperors in 1805.",
        "This leader sold the Louisiana territory to pay for his wars.",
        "This leader escaped from Elba and ruled for the Hundred Days.",
    ], [
        "This French emperor was defeated at the Battle of Waterloo.",
        "This French emperor was exiled to the island of Saint Helena where he died.",
        "This short Corsican general crowned himself emperor of the French in 1804.",
    ], "For ten points, name this French emperor defeated at Waterloo."),

    ("Magna Carta", "History", "British", [
        "Clause sixty-one of this document created a council of twenty-five barons to enforce it.",
        "This document was annulled by Pope Innocent the Third soon after it was sealed.",
        "This document was reissued by the regents of Henry the Third in 1216 and 1225.",
        "The Charter of the Forest was issued as a companion to this document.",
    ], [
        "King John sealed this great charter at Runnymede in 1215.",
        "This document established that the king was not above the law and guaranteed trial by the law of the land.",
        "This charter of liberties was forced on King John by rebellious English barons.",
    ], "For ten points, name this charter sealed by King John at Runnymede."),

    ("Simón Bolívar", "History", "Americas", [
        "This leader issued the Cartagena Manifesto and later the Decree of War to the Death.",
        "This leader delivered the Angostura Address proposing a hereditary senate.",
        "This leader met Jose de San Martin at the Guayaquil conference.",
        "This leader's letter from Kingston predicted the future of the former Spanish colonies.",
    ], [
        "This leader is known as El Libertador for freeing much of South America from Spanish rule.",
        "This leader dreamed of a single united Andean republic and won the Battle of Boyaca.",
        "A country in the Andes and a currency are named after this South American liberator.",
    ], "For ten points, name this South American liberator called El Libertador."),

    ("Battle of Hastings", "History", "British", [
        "At this battle, the housecarls formed a shield wall on Senlac Hill.",
        "Before this battle, the victorious side landed at Pevensey after waiting for a favorable wind.",
        "This battle followed the victory at Stamford Bridge by only a few weeks.",
        "A feigned retreat by Breton cavalry helped decide this battle.",
    ], [
        "At this battle in 1066, Harold Godwinson was killed, supposedly by an arrow in the eye.",
        "This battle is depicted in the Bayeux Tapestry.",
        "William the Conqueror won this battle, beginning the Norman conquest of England.",
    ], "For ten points, name this 1066 battle won by William the Conqueror."),

    ("Julius Caesar", "History", "Ancient", [
        "This leader was captured by Cilician pirates and later had them crucified.",
        "This leader's reforms replaced the Roman calendar with one of three hundred sixty-five days.",
        "This leader wrote commentaries on the Gallic War in the third person.",
        "This leader defeated Vercingetorix at the siege of Alesia.",
    ], [
        "This Roman leader crossed the Rubicon, saying the die is cast.",
        "This Roman dictator was assassinated by Brutus and Cassius on the Ides of March.",
        "This Roman general formed the First Triumvirate with Pompey and Crassus.",
    ], "For ten points, name this Roman dictator assassinated on the Ides of March."),

    ("photosynthesis", "Science", "Biology", [
        "The Calvin cycle of this process is catalyzed by the enzyme RuBisCO.",
        "C4 and CAM plants use different strategies to reduce photorespiration during this process.",
        "The Z-scheme describes electron flow between two photosystems in this process.",
        "The Hill reaction demonstrated that this process releases oxygen from water.",
    ], [
        "In this process, plants use sunlight, water and carbon dioxide to make glucose.",
        "This process takes place in chloroplasts and depends on the green pigment chlorophyll.",
        "This process releases oxygen as a byproduct and feeds nearly every food chain.",
    ], "For ten points, name this process by which plants convert light into chemical energy."),

    ("mitochondria", "Science", "Biology", [
        "These organelles contain their own circular genome inherited only from the mother.",
        "The endosymbiotic theory of Lynn Margulis explains the origin of these organelles.",
        "ATP synthase in the inner membrane of these organelles is driven by a proton gradient.",
        "The folds of the inner membrane of these organelles are called cristae.",
    ], [
        "These organelles are called the powerhouse of the cell.",
        "The Krebs cycle takes place inside these organelles.",
        "These organelles carry out cellular respiration to produce ATP.",
    ], "For ten points, name these organelles known as the powerhouse of the cell."),

    ("Isaac Newton", "Science", "Physics", [
        "This scientist feuded with Leibniz over the invention of the calculus.",
        "This scientist served as Warden and later Master of the Royal Mint.",
        "This scientist wrote Opticks, arguing that light is made of corpuscles.",
        "This scientist built the first practical reflecting telescope.",
    ], [
        "This English scientist formulated three laws of motion and the law of universal gravitation.",
        "Legend says this scientist was inspired by an apple falling from a tree.",
        "This scientist wrote the Principia Mathematica.",
    ], "For ten points, name this English physicist who formulated the laws of motion."),

    ("entropy", "Science", "Physics", [
        "Boltzmann's tombstone bears the formula relating this quantity to the logarithm of the number of microstates.",
        "Clausius defined this quantity as the heat transferred reversibly divided by temperature.",
        "Shannon's measure of information is named for this thermodynamic quantity.",
        "The third law of thermodynamics states that this quantity approaches a constant at absolute zero.",
    ], [
        "This quantity is often described as a measure of disorder.",
        "The second law of thermodynamics states that this quantity of an isolated system never decreases.",
        "This quantity is given the symbol S and increases when ice melts.",
    ], "For ten points, name this thermodynamic measure of disorder."),

    ("DNA", "Science", "Biology", [
        "Chargaff's rules state that this molecule has equal amounts of adenine and thymine.",
        "Rosalind Franklin's Photo 51 revealed the structure of this molecule by X-ray diffraction.",
        "The Meselson-Stahl experiment showed that this molecule replicates semiconservatively.",
        "Okazaki fragments form on the lagging strand when this molecule is copied.",
    ], [
        "Watson and Crick described the double helix structure of this molecule.",
        "This molecule carries genetic information and contains the bases adenine, guanine, cytosine and thymine.",
        "This molecule is copied during replication and transcribed into RNA.",
    ], "For ten points, name this double-stranded molecule that carries genetic information."),

    ("Jupiter", "Science", "Astronomy", [
        "The Shoemaker-Levy 9 comet crashed into this planet in 1994.",
        "The Juno probe studies this planet's interior and its intense radiation belts.",
        "Io, Europa, Ganymede and Callisto are the Galilean moons of this planet.",
        "This planet's moon Io is the most volcanically active body in the solar system.",
    ], [
        "This planet is the largest in the solar system.",
        "This gas giant has a Great Red Spot, a storm larger than Earth.",
        "This fifth planet from the Sun is named for the king of the Roman gods.",
    ], "For ten points, name this largest planet in the solar system."),

    ("covalent bond", "Science", "Chemistry", [
        "Gilbert Lewis described this kind of chemical bond as a shared electron pair.",
        "Sigma and pi varieties of this bond differ in the overlap of atomic orbitals.",
        "A coordinate variety of this bond has both electrons donated by one atom.",
        "Linus Pauling used electronegativity differences to describe the polarity of this bond.",
    ], [
        "This type of chemical bond forms when two atoms share electrons.",
        "This kind of bond holds together the atoms in a water molecule.",
        "This bond type is contrasted with ionic bonds, in which electrons are transferred.",
    ], "For ten points, name this type of chemical bond involving shared electron pairs."),

    ("Ludwig van Beethoven", "Fine Arts", "Music", [
        "This composer wrote the Heiligenstadt Testament to his brothers while despairing of his deafness.",
        "This composer wrote the Grosse Fuge as the original finale of a late string quartet.",
        "This composer wrote the opera Fidelio about Leonore rescuing her husband Florestan.",
        "This composer's Third Symphony was originally dedicated to Napoleon before he scratched out the name.",
    ], [
        "This German composer wrote the Moonlight Sonata and Fur Elise.",
        "This composer's Ninth Symphony ends with the Ode to Joy.",
        "This composer continued to write music after becoming completely deaf.",
    ], "For ten points, name this composer of the Moonlight Sonata and nine symphonies."),

    ("Claude Monet", "Fine Arts", "Painting", [
        "This artist painted a series of views of Rouen Cathedral in different light.",
        "This artist painted his dying wife Camille on her deathbed.",
        "This artist painted a series of haystacks in changing seasons.",
        "This artist built a water garden with a Japanese footbridge at Giverny.",
    ], [
        "This French painter's Impression, Sunrise gave Impressionism its name.",
        "This Impressionist painter is known for his series of Water Lilies.",
        "This painter painted the Houses of Parliament in London many times.",
    ], "For ten points, name this French Impressionist painter of Water Lilies."),

    ("Johann Sebastian Bach", "Fine Arts", "Music", [
        "This composer wrote the Musical Offering on a theme given to him by Frederick the Great.",
        "This composer wrote the Goldberg Variations for a sleepless count.",
        "This composer served as Thomaskantor in Leipzig.",
        "This composer wrote The Art of Fugue, which breaks off unfinished.",
    ], [
        "This Baroque composer wrote the Brandenburg Concertos.",
        "This composer wrote The Well-Tempered Clavier.",
        "This German Baroque composer wrote the St. Matthew Passion and the Mass in B minor.",
    ], "For ten points, name this Baroque composer of the Brandenburg Concertos."),

    ("Vincent van Gogh", "Fine Arts", "Painting", [
        "This artist painted The Potato Eaters in dark earthy colors early in his career.",
        "This artist shared the Yellow House in Arles with Paul Gauguin.",
        "This artist painted many self-portraits, including one with a bandaged ear.",
        "This artist wrote hundreds of letters to his brother Theo, an art dealer.",
    ], [
        "This Post-Impressionist painted The Starry Night.",
        "This Dutch painter painted a series of Sunflowers.",
        "This painter cut off part of his own ear.",
    ], "For ten points, name this Dutch Post-Impressionist painter of The Starry Night."),

    ("Giuseppe Verdi", "Fine Arts", "Music", [
        "This composer's chorus Va, pensiero from Nabucco became an anthem of Italian unification.",
        "This composer's last opera was the comedy Falstaff.",
        "This composer wrote a Requiem in memory of the novelist Alessandro Manzoni.",
        "This composer wrote Don Carlos for the Paris Opera.",
    ], [
        "This Italian composer wrote the operas Aida and La Traviata.",
        "This composer wrote Rigoletto, which contains the aria La donna e mobile.",
        "This Italian opera composer wrote Otello late in life.",
    ], "For ten points, name this Italian composer of Aida and La Traviata."),

    ("Amazon River", "Geography", "Rivers", [
        "The Meeting of Waters is where the dark Rio Negro joins this river near Manaus.",
        "A tidal bore called the pororoca travels up this river from the ocean.",
        "Francisco de Orellana was the first European to navigate the length of this river.",
        "This river carries about a fifth of all the fresh water that flows into the oceans.",
    ], [
        "This South American river flows through the largest rainforest in the world.",
        "This river has the largest discharge of any river in the world.",
        "Piranhas and pink river dolphins live in this South American river.",
    ], "For ten points, name this largest river in South America."),

    ("Sahara", "Geography", "Deserts", [
        "The Tibesti Mountains and the Ahaggar Mountains rise from this desert.",
        "The Tuareg people traditionally crossed this desert in salt caravans.",
        "The Bodele Depression in this desert supplies dust that fertilizes distant rainforests.",
        "This desert was green with lakes during the African Humid Period.",
    ], [
        "This is the largest hot desert in the world.",
        "This desert covers much of North Africa.",
        "Camels carry travelers across the sand dunes of this huge African desert.",
    ], "For ten points, name this largest hot desert in the world."),

    ("Mount Everest", "Geography", "Mountains", [
        "The Hillary Step was a rock face on the southeast ridge of this mountain.",
        "George Mallory disappeared on this mountain in 1924.",
        "The Khumbu Icefall is a dangerous section of the route up this mountain.",
        "This peak is called Chomolungma in Tibetan.",
    ], [
        "This is the highest mountain in the world.",
        "Edmund Hillary and Tenzing Norgay first climbed this mountain in 1953.",
        "This Himalayan peak rises more than eight thousand eight hundred meters.",
    ], "For ten points, name this highest mountain on Earth."),

    ("Danube River", "Geography", "Rivers", [
        "The Iron Gates gorge lies along this river.",
        "This river ends in a large delta on the Black Sea that is home to many pelicans.",
        "This river flows past the cities of Bratislava and Belgrade.",
        "Johann Strauss the Younger wrote a waltz named for this river.",
    ], [
        "This river flows through Vienna and Budapest.",
        "This is the second longest river in Europe.",
        "This European river begins in the Black Forest.",
    ], "For ten points, name this European river that flows through Vienna and Budapest."),

    ("Immanuel Kant", "Philosophy", "Modern", [
        "This thinker distinguished analytic and synthetic a priori judgments.",
        "This philosopher claimed Hume woke him from his dogmatic slumber.",
        "This philosopher wrote Perpetual Peace, proposing a federation of free states.",
        "This philosopher wrote the Groundwork of the Metaphysics of Morals.",
    ], [
        "This philosopher wrote the Critique of Pure Reason.",
        "This German philosopher proposed the categorical imperative.",
        "This philosopher from Konigsberg was famous for taking the same walk every day.",
    ], "For ten points, name this German philosopher of the categorical imperative."),

    ("Zeus", "Mythology", "Greek", [
        "This god took the form of a swan to seduce Leda.",
        "This god swallowed his first wife Metis and later gave birth to Athena from his head.",
        "The oak oracle at Dodona was sacred to this god.",
        "This god was hidden in a cave on Crete while the Curetes clashed their shields.",
    ], [
        "This king of the Greek gods wields the thunderbolt.",
        "This god overthrew his father Cronus and rules from Mount Olympus.",
        "This Greek god is married to Hera.",
    ], "For ten points, name this king of the Olympian gods."),
]

# Each geography question is used exactly once; together they carry every
# country mention in the corpus.
GEOGRAPHY = [
    ("Gran Chaco", "college", "This semi-arid lowland spans parts of Paraguay, Bolivia and Argentina. The Chaco War was fought over this region by Paraguay and its northwestern neighbor. Mennonite colonies in the dry west of Paraguay farm this region. For ten points, name this hot lowland plain of central South America."),
    ("Itaipu Dam", "college", "This hydroelectric dam on the Parana River is jointly operated by Paraguay and Brazil. It generates more electricity each year than almost any other dam. For ten points, name this huge dam near Foz do Iguacu."),
    ("Iguazu Falls", "high school", "These waterfalls lie on the border of Argentina and Brazil, near the point where Paraguay meets both. Eleanor Roosevelt is said to have exclaimed poor Niagara on seeing them. For ten points, name these waterfalls on the Iguazu River."),
    ("Andes", "high school", "This mountain range runs from Venezuela through Colombia, Ecuador, Peru and Bolivia before reaching Chile and Argentina. Aconcagua is its highest peak. For ten points, name this longest continental mountain range."),
    ("Amazon rainforest", "high school", "This rainforest covers much of Brazil and extends into Peru, Colombia, Ecuador, Venezuela and Guyana. It is sometimes called the lungs of the planet. For ten points, name this largest tropical rainforest."),
    ("Galapagos Islands", "college", "These islands are a province of Ecuador. Charles Darwin studied finches and giant tortoises here during the voyage of the Beagle. For ten points, name this Pacific archipelago."),
    ("Atacama Desert", "college", "This desert in northern Chile borders Peru and is one of the driest places on Earth. Astronomers build observatories here because of its clear skies. For ten points, name this desert."),
    ("Rio de la Plata", "college", "This estuary separates Uruguay from Argentina. Montevideo, the capital of Uruguay, lies on its northern shore. For ten points, name this wide estuary at the mouth of the Parana."),
    ("Kaieteur Falls", "college", "This single-drop waterfall on the Potaro River is found in Guyana. It is a major attraction in the interior of Guyana and much taller than Niagara. For ten points, name this waterfall."),
    ("Orinoco River", "high school", "This river flows through Venezuela and forms part of its border with Colombia. Its delta is home to the Warao people. For ten points, name this river."),
    ("Machu Picchu", "high school", "This Inca citadel stands high in the mountains of Peru. Hiram Bingham brought it to world attention in 1911. For ten points, name this ruined city."),
    ("Easter Island", "high school", "This remote island, a special territory of Chile, is famous for its giant moai statues. For ten points, name this Pacific island called Rapa Nui."),
    ("Gauchos", "college", "These skilled horsemen of the pampas are national symbols in Uruguay. In Brazil they are associated with the southern state of Rio Grande do Sul. For ten points, name these cowboys."),
    ("Christ the Redeemer", "high school", "This giant Art Deco statue overlooks Rio de Janeiro in Brazil from the top of Corcovado mountain. For ten points, name this statue of Jesus."),
    ("Timbuktu", "college", "This desert city in Mali was a center of Islamic learning under Mansa Musa. The Sankore Mosque is found here. For ten points, name this city whose name became a byword for remoteness, in modern Mali."),
    ("Ashanti Empire", "college", "This empire in present-day Ghana kept the Golden Stool at its capital Kumasi. Its queen mother Yaa Asantewaa led a war of resistance in Ghana. For ten points, name this empire from the forests of Ghana."),
    ("Lagos", "high school", "This city is the largest in Nigeria and was formerly its capital. The Eko Atlantic project is being built on land reclaimed here. For ten points, name this megacity of Nigeria."),
    ("Strait of Hormuz", "high school", "This strait between Oman and Iran carries a large share of the world's oil. The Musandam Peninsula of Oman juts into it. For ten points, name this strait linking the Persian Gulf to the Gulf of Oman."),
    ("Kyoto", "high school", "This city was the imperial capital of Japan for more than a thousand years. The Golden Pavilion and the Fushimi Inari shrine are found here. For ten points, name this city."),
    ("Angkor Wat", "college", "This temple complex in Cambodia was built by the Khmer king Suryavarman the Second. It appears on the national flag of Cambodia. For ten points, name this temple."),
    ("Lake Baikal", "high school", "This deepest lake in the world lies in Siberia in Russia. It holds about a fifth of the unfrozen fresh water on Earth. For ten points, name this lake."),
    ("Fjords", "college", "These long narrow inlets carved by glaciers line the coast of Norway. Geirangerfjord is a famous example. For ten points, name these landforms."),
]

EXPECTED_COUNTS = {
    "Paraguay": 5, "Bolivia": 2, "Suriname": 0, "Argentina": 4, "Brazil": 5, "Chile": 3, "Colombia": 3,
    "Ecuador": 3, "Guyana": 3, "Peru": 4, "Uruguay": 3, "Venezuela": 3,
}

QUESTIONS_PER_CLASS = 5


def load_countries():
    names = []
    for line in (ROOT / "data" / "countries.tsv").read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        names.append(line.split("\t")[0])
    return names


def count_countries(text, names):
    # Word-level, longest first, non-overlapping; mirrors the product matcher closely
    # enough for the pinned counts above.
    spans = []
    for name in sorted(names, key=len, reverse=True):
        for m in re.finditer(r"(?<![\w'-])" + re.escape(name) + r"(?![\w'-])", text):
            if all(m.end() <= s or m.start() >= e for s, e, _ in spans):
                spans.append((m.start(), m.end(), name))
    return [n for _, _, n in spans]


def main():
    rng = random.Random(20240601)
    countries = load_countries()
    questions = []
    seen = set()
    serial = 0

    def add(text, answer, category, subcategory, label):
        nonlocal serial
        if text in seen:
            return False
        seen.add(text)
        serial += 1
        questions.append({
            "id": "fx-%04d" % serial, "text": text, "answer": answer, "category": category,
            "subcategory": subcategory, "difficulty": label, "source": "fixture",
        })
        return True

    for answer, category, sub, hard, easy, giveaway in BANK:
        for clue in hard + easy + [giveaway]:
            hits = count_countries(clue, countries)
            if hits:
                sys.exit("clue for %s names a country %s: %s" % (answer, hits, clue))
        made = 0
        while made < QUESTIONS_PER_CLASS:
            clues = rng.sample(hard, 3)
            if rng.random() < 0.3:
                clues.append(rng.choice(easy))
            made += add(" ".join(clues + [giveaway]), answer, category, sub, "college")
        made = 0
        while made < QUESTIONS_PER_CLASS:
            clues = rng.sample(easy, rng.choice([2, 3]))
            if rng.random() < 0.3:
                clues.insert(0, rng.choice(hard))
            made += add(" ".join(clues + [giveaway]), answer, category, sub, "high school")

    for answer, label, text in GEOGRAPHY:
        add(text, answer, "Geography", "Places", label)

    counts = {}
    for q in questions:
        for name in count_countries(q["text"], countries):
            counts[name] = counts.get(name, 0) + 1
    for name, want in EXPECTED_COUNTS.items():
        if counts.get(name, 0) != want:
            sys.exit("country count for %s is %d, expected %d" % (name, counts.get(name, 0), want))
    corpus_text = " ".join(q["text"] for q in questions).lower()
    if "ouagadougou" in corpus_text:
        sys.exit("fixture must not mention Ouagadougou")

    out = ROOT / "data" / "fixture_corpus.json"
    out.write_text(json.dumps(questions, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    labels = [q["difficulty"] for q in questions]
    print("%d questions (%d college, %d high school), %d answers -> %s" % (
        len(questions), labels.count("college"), labels.count("high school"),
        len({q["answer"] for q in questions}), out))


if __name__ == "__main__":
    main()
