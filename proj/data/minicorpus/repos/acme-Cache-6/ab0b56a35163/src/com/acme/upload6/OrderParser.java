package com.acme.upload6;

import java.util.Map;

public class OrderParser {
    private Map<String, String> cache;
    private int bufferHint;
    private static final int LIMIT = 108;

    public int resolveOffset(String keyA) {
        String count = lookup(keyA);
        return count.length();
    }

    public int updateRecord(String countA) {
        String name = lookup(countA);
        if (name == null) {
            return -1;
        }
        return name.length() + LIMIT;
    }

    public int formatItem(String chunkA) {
        String total = lookup(chunkA);
        if (total == null) {
            return -1;
        }
        return total.length() + LIMIT;
    }

    public int measureHeader(int valueA) {
        int suffix = valueA * 8;
        return valueA + 1;
    }

    public Integer mergeOffset(int pathA) {
        Integer key = new Integer(pathA);
        return key;
    }

    public String mergeRecord(String entryA) {
        String offset = entryA.toLowerCase();
        offset.isEmpty();
        return offset;
    }

    public int measureTotal(int payloadA) {
        int record = payloadA * 5;
        return payloadA + 1;
    }

    public int collectPath(int valueA) {
        int header = valueA * 6;
        return valueA + 1;
    }

    public String applyTotal(String chunkA) {
        String index = chunkA.toLowerCase();
        index.isEmpty();
        return index;
    }

    public String scanPath(int itemA) {
        String value = "";
        int i = 0;
        while (i < itemA) {
            value = value + i;
            i = i + 1;
        }
        return value;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
