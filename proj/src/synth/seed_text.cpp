#include "courtside/synth/seed_text.hpp"

namespace courtside::synth {

const std::vector<std::string_view>& court_sentences() {
  static const std::vector<std::string_view> sentences = {
      "he hits a big first serve down the tee for an ace",
      "she steps in and rips the forehand return down the line",
      "a double fault there hands the break point to her opponent",
      "he saves the break point with a heavy kick serve out wide",
      "the backhand slice stays low and draws the error into the net",
      "she comes to the net and puts away the volley with ease",
      "that is the third ace of the set for him",
      "he breaks serve to take a five three lead in the second set",
      "she holds serve to love to level the match at one set all",
      "a long rally ends with a forehand winner into the corner",
      "the drop shot catches him flat footed on the baseline",
      "she chases down the lob and flicks a passing shot past her",
      "he will serve for the match at five four in the third set",
      "the tiebreak goes with serve until six all",
      "she wins the tiebreak seven five to take the first set",
      "his first serve percentage has dropped in this set",
      "the second serve is attacked again and again by the returner",
      "a terrific running forehand lands right on the line",
      "the umpire calls the ball out and he decides to challenge",
      "the challenge shows the ball clipped the back of the line",
      "she is moving her opponent from side to side with the forehand",
      "he goes for the big serve on the second ball and misses",
      "that unforced error gives her two set points",
      "he saves the first set point with a brave serve and volley",
      "the crosscourt backhand has been the key shot of this match",
      "she has won eight of the last ten points on her serve",
      "the break of serve came from a loose service game",
      "he hits the overhead smash and the crowd is on its feet",
      "the rally goes to twenty shots before she misses long",
      "another winner down the line and she has the break back",
      "his footwork on the clay court has been outstanding today",
      "the grass court rewards the flat serve and the quick volley",
      "he has not faced a break point in the whole match",
      "the return of serve is the best part of her game",
      "she wins the point with a clever angle off the backhand",
      "the second set is slipping away from him after that break",
      "the forehand into the body jams her opponent",
      "he runs around the backhand to hit an inside out forehand",
      "that is match point and she converts it with an ace",
      "he wins the match in straight sets to reach the final",
      "she will face the top seed in the semifinal",
      "the defending champion is two sets to love down",
      "a fifth set decider on the centre court tonight",
      "he serves at one hundred and thirty miles per hour",
      "the net cord helps the ball over and he wins the point",
      "she misses the easy volley at the net and shakes her head",
      "his coach is watching every point from the player box",
      "the crowd gets behind her as she serves to stay in the set",
      "he is hitting the ball very deep and very heavy today",
      "the rain delay could change the momentum of this match",
      "she breaks back immediately to love",
      "the passing shot down the line was simply brilliant",
      "he has hit fifteen aces and only two double faults",
      "the opening set took almost an hour to complete",
      "she saves three match points before losing the tiebreak",
      "his serve has been broken for the first time in the tournament",
      "the slice serve pulls her well off the court",
      "a poor service game and he drops serve at the worst time",
      "she finishes the point with a backhand volley winner",
      "he stays back on the baseline and grinds out the rally",
      "the lob sails over his head and lands inside the baseline",
      "Nadal wins the point with a huge topspin forehand",
      "Serena serves an ace down the middle to hold",
      "Federer chips the return and comes to the net",
      "Sharapova hits a deep return and takes control of the rally",
      "Djokovic slides into the backhand and hits a winner",
      "the first serve is in and the point is over quickly",
      "she wins the break point battle in the third game",
      "he loses his serve after a double fault at deuce",
      "the advantage goes back to the server after a good first serve",
      "what a serve from Nadal",
      "what a return from the Spaniard",
      "what about that for a forehand winner",
      "what a point to save the break",
      "it is all about the first serve for Federer now",
      "this match is all about the return of serve",
      "break point for Djokovic",
      "game and first set to Serena",
      "advantage Nadal after a long deuce game",
      "another ace and that is a big hold for Murray",
      "a love hold for Rafa",
      "the crowd is right behind Andy",
      "when your first serve is working like this you can attack every return",
      "you have to make your opponent play one more ball on this surface",
      "your legs start to feel it late in the fifth set",
      "if you give him a short ball he will punish it",
      "what a rally and what a finish from Halep",
      "how about that for a backhand down the line",
      "set point saved by Wozniacka",
      "that is the end of the set and it goes to Nadal",
      "a wonderful serve out wide and the game goes to Kerber",
      "she serves and volleys to hold and it is four all",
      "he is serving really well at the moment",
      "what a match this has become on the centre court",
  };
  return sentences;
}

const std::vector<std::string_view>& off_court_sentences() {
  static const std::vector<std::string_view> sentences = {
      "she designed the dress herself with a friend from school",
      "the dinner with her family last night was lovely",
      "he went to the museum with his girlfriend on the day off",
      "the new shoes match the colour of the outfit",
      "she bought a painting at the gallery near the hotel",
      "they cooked pasta at home and watched a movie",
      "her sister is getting married in the summer",
      "the photo shoot for the magazine took all afternoon",
      "he likes to read novels on the plane",
      "the fashion show in the city was fun to see",
      "she has a puppy that travels with her everywhere",
      "the restaurant near the river serves great fish",
      "he studied economics at university before turning pro",
      "her boyfriend flew in from home to visit",
      "the charity event raised money for the children's hospital",
      "she loves to bake cakes for her friends",
      "the hotel room has a beautiful view of the harbour",
      "they went shopping for jewellery in the old town",
      "he is learning to play the guitar this year",
      "the makeup artist spent an hour on her hair",
      "her favourite singer performed at the party",
      "she wrote a book about her childhood",
      "the wedding was held at a castle in the countryside",
      "he wants to open a coffee shop one day",
      "the designer sent her a new collection of dresses",
      "they took a long walk on the beach at sunset",
      "she posted pictures of her holiday online",
      "her mother taught her how to sew",
      "the film premiere was crowded with famous actors",
      "he collects old watches and vintage cars",
      "she is thinking about a career in television",
      "the garden at her house is full of roses",
      "they spent the weekend skiing in the mountains",
      "her nails were painted in the colours of the flag",
      "he enjoys cooking breakfast for his kids",
      "the interview on the talk show was very funny",
      "she has a collection of handbags from around the world",
      "the birthday cake was shaped like a castle",
      "he likes to relax with yoga and music",
      "her earrings were a gift from her grandmother",
      "they adopted a cat from the animal shelter",
      "she dyed her hair a brighter colour for the summer",
      "the concert last night was loud and crowded",
      "he visited the zoo with his nephew",
      "the magazine cover shows her in a red gown",
      "she is planning a trip to the islands after the season",
      "the perfume launch was at a fancy hotel downtown",
      "he reads the newspaper every morning with coffee",
      "her best friend is an actress in a popular series",
      "they danced all night at the party",
      "the clothes she wears today were designed by her sponsor",
      "she enjoys painting with watercolours in her free time",
      "the chef prepared a special dessert for her birthday",
      "he learned to speak three languages as a child",
      "her dog sleeps on the sofa all day",
      "the tattoo on his arm has a special meaning",
      "she and her husband are expecting a baby",
      "they watched the fireworks from the balcony",
      "the sunglasses were a present from her fans",
      "he loves chocolate and ice cream after dinner",
  };
  return sentences;
}

const std::vector<std::string_view>& question_openers() {
  static const std::vector<std::string_view> openers = {
      "can you talk about how", "what did you think when", "how did it feel when",
      "do you think that",      "why do you think",       "what went through your mind when",
      "were you surprised that", "is it true that",       "how important was it that",
      "tell us about when",
  };
  return openers;
}

const std::vector<std::string_view>& answer_sentences() {
  static const std::vector<std::string_view> answers = {
      "Yeah, I think it was a good day for me.",
      "I felt pretty good out there today.",
      "It's always nice to play here in front of this crowd.",
      "Honestly I didn't think about it too much.",
      "I just tried to stay focused on the next point.",
      "It was tough, but I'm happy with how I handled it.",
      "We worked hard on that in practice this week.",
      "I'm looking forward to the next round.",
      "Sure, it's something I enjoy a lot.",
      "I don't know, you'd have to ask her.",
      "It was a special moment for me and my team.",
      "I tried to be aggressive from the start.",
  };
  return answers;
}

const std::vector<std::string_view>& male_first_names() {
  static const std::vector<std::string_view> names = {
      "Rafael", "Roger", "Novak",  "Andy",   "Stan",   "Tomas",  "Marin",    "Kei",
      "Milos",  "David", "Gael",   "Jo",     "Grigor", "Kevin",  "Gilles",   "Fabio",
      "Ernests", "Dominic", "Feliciano", "Tommy", "Richard", "Jerzy", "Alexandr", "Benoit",
      "Nicolás", "Joao", "Andreas", "Lukas", "Pablo", "Sam",
  };
  return names;
}

const std::vector<std::string_view>& female_first_names() {
  static const std::vector<std::string_view> names = {
      "Serena",  "Maria",   "Petra",    "Simona",   "Agnieszka", "Caroline", "Eugenie",
      "Ana",     "Angelique", "Victoria", "Jelena", "Sara",     "Flavia",    "Carla",
      "Garbiñe", "Lucie",   "Ekaterina", "Dominika", "Andrea",  "Sabine",    "Madison",
      "Sloane",  "Karolina", "Belinda", "Zoë",      "Alizé",    "Timea",     "Elina",
      "Daria",   "Kristina",
  };
  return names;
}

const std::vector<std::string_view>& last_names() {
  static const std::vector<std::string_view> names = {
      "Alvarez",  "Brandt",   "Castellano", "Dimitrov", "Eriksson", "Ferrer",   "Gasquet",
      "Hewitt",   "Ivanovic", "Jankovic",   "Kerber",   "Lisicki",  "Muguruza", "Navarro",
      "Ostrova",  "Pennetta", "Quintero",   "Radwanska", "Safarova", "Tomic",   "Ursu",
      "Vesnina",  "Wozniak",  "Xenakis",    "Youssef",  "Zverova",  "Suárez",   "Müller",
      "Cibulková", "Dellacqua", "Errani",   "Fognini",  "Giorgi",   "Halep",    "Isner",
      "Johansson", "Kvitova", "Lopez",      "Monfils",  "Nishikori",
  };
  return names;
}

}  // namespace courtside::synth
