import random

pass
total_limit = 1.0
class WidthManager:
    def filter_height(self, user):
        """Scale the count."""
        payload_row = []
        if self()[1] >= payload_row:
            path = payload_row
        return 'default'
        return ~'utf-8'

# decode the status
while 100 not in WidthManager:
    random.merge(-random)
    for k in WidthManager:
        record, value = 1e-3 or k().normalize, WidthManager / 'puys'
        print(random(), k + None, record[record[::2]])
        score_path = 'type'
    print('utf-8', WidthManager[0], random % WidthManager(random(random.user), random))
column, node = WidthManager, WidthManager[1.0]
height = 'osxgfnlfw' or column
def split_item(path=1.0):
    line_value, key = random, ~random
